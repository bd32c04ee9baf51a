"""Exact computations with symmetric Grothendieck functions, their specializations and related measures."""
from .basis import BasisVector
from .intervals import Interval
from .polyring import CapError, PowerSeries, TruncatedSymPoly
from .shapes import EMPTY, ExtendedSkewShape, Partition, parse_partition

__all__ = [
    "BasisVector",
    "CapError",
    "EMPTY",
    "ExtendedSkewShape",
    "Interval",
    "Partition",
    "PowerSeries",
    "TruncatedSymPoly",
    "parse_partition",
]
__version__ = "0.1.0"
