"""Upper-triangular Toeplitz matrices ``[a_{j-i}]`` and total-nonnegativity tests."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .intervals import Interval, SpecValue, lower, sign_of, upper
from .polyring import jacobi_trudi, ring_det


@dataclass(frozen=True)
class ToeplitzBand:
    """Values ``a_0 = 1, a_1, ..., a_N``; ``a_n = 0`` for ``n < 0`` or ``n > N``."""

    values: tuple
    size: int | None = None

    def __post_init__(self):
        vals = tuple(v if isinstance(v, Interval) else Fraction(v) for v in self.values)
        if not vals or vals[0] != 1:
            raise ValueError("a Toeplitz band needs a_0 = 1")
        object.__setattr__(self, "values", vals)
        if self.size is None:
            object.__setattr__(self, "size", len(vals))
        if self.size < 1:
            raise ValueError("size must be positive")

    def a(self, n: int) -> SpecValue:
        return self.values[n] if 0 <= n < len(self.values) else Fraction(0)

    def entry(self, i: int, j: int) -> SpecValue:
        return self.a(j - i)

    def matrix(self) -> list[list]:
        return [[self.entry(i, j) for j in range(self.size)] for i in range(self.size)]


def minor(band: ToeplitzBand, rows: Sequence[int], cols: Sequence[int]) -> SpecValue:
    """Determinant of the submatrix on the given (strictly increasing) index lists."""
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise ValueError("row and column index lists must have equal length")
    for idx in (rows, cols):
        if any(b <= a for a, b in zip(idx, idx[1:])) or any(not 0 <= k < band.size for k in idx):
            raise ValueError(f"indices must be strictly increasing within [0, {band.size})")
    return ring_det([[band.entry(i, j) for j in cols] for i in rows], one=Fraction(1))


@dataclass(frozen=True)
class TNNResult:
    status: str  # pass | fail | indeterminate
    witness: tuple | None = None  # (rows, cols, value)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _all_index_pairs(size: int, order: int) -> Iterator[tuple[tuple, tuple]]:
    for rows in itertools.combinations(range(size), order):
        for cols in itertools.combinations(range(size), order):
            yield rows, cols


def _column_consecutive_pairs(size: int, order: int) -> Iterator[tuple[tuple, tuple]]:
    for rows in itertools.combinations(range(size), order):
        for start in range(size - order + 1):
            yield rows, tuple(range(start, start + order))


def _scan(band: ToeplitzBand, pairs: Iterator[tuple[tuple, tuple]]) -> TNNResult:
    checked = 0
    undecided = None
    for rows, cols in pairs:
        value = minor(band, rows, cols)
        checked += 1
        s = sign_of(value)
        if s is None:
            undecided = undecided or (rows, cols, value)
        elif s < 0:
            return TNNResult("fail", (rows, cols, value), checked)
    if undecided is not None:
        return TNNResult("indeterminate", undecided, checked)
    return TNNResult("pass", None, checked)


def brute_force_tnn(band: ToeplitzBand, max_order: int | None = None) -> TNNResult:
    """Every minor of order ``<= max_order`` (default: all), in order of size then index lists."""
    top = band.size if max_order is None else min(max_order, band.size)
    pairs = itertools.chain.from_iterable(_all_index_pairs(band.size, k) for k in range(1, top + 1))
    return _scan(band, pairs)


def criterion_tnn(band: ToeplitzBand, max_order: int | None = None) -> TNNResult:
    """Only minors whose columns are consecutive (rows arbitrary)."""
    top = band.size if max_order is None else min(max_order, band.size)
    pairs = itertools.chain.from_iterable(_column_consecutive_pairs(band.size, k) for k in range(1, top + 1))
    return _scan(band, pairs)


def is_totally_nonnegative(band: ToeplitzBand, order_cap: int = 4) -> TNNResult:
    """All minors up to order ``min(order_cap, 4)`` plus column-consecutive minors up to ``order_cap``."""
    if order_cap > band.size:
        raise ValueError("order_cap cannot exceed the matrix size")
    first = brute_force_tnn(band, min(order_cap, 4))
    if first.status == "fail":
        return first
    second = criterion_tnn(band, order_cap) if order_cap > 4 else TNNResult("pass")
    if second.status == "fail":
        return TNNResult("fail", second.witness, first.checked + second.checked)
    status = "indeterminate" if "indeterminate" in (first.status, second.status) else "pass"
    witness = first.witness or second.witness
    return TNNResult(status, witness, first.checked + second.checked)


def log_concavity(band: ToeplitzBand) -> bool:
    """``a_n^2 >= a_{n-1} a_{n+1}`` for every interior index (fails only when certainly violated)."""
    vals = band.values
    for n in range(1, len(vals) - 1):
        sq = vals[n] * vals[n]
        prod = vals[n - 1] * vals[n + 1]
        if upper(sq) < lower(prod):
            return False
    return True


def determinant_values(hvals: Sequence, lam) -> SpecValue:
    """``det[a_{λ_i - i + j}]``; for the normalized H-band this is ``F_λ(φ)/H_0^{ℓ}``."""
    return jacobi_trudi(lam, hvals)
