"""Finitely supported vectors indexed by partitions and tagged with their basis."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .shapes import Partition, partition_key

BASES = ("schur", "gtilde", "gsigned", "gdual", "h", "monomial")


class BasisVector:
    """A map ``partition -> rational`` living in one named basis.

    Zero coefficients are never stored; vectors in different bases refuse to
    combine.
    """

    __slots__ = ("basis", "_support")

    def __init__(self, basis: str, support: Mapping | Iterable = ()):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        items = support.items() if isinstance(support, Mapping) else support
        data: dict[Partition, Fraction] = {}
        for lam, c in items:
            lam = Partition(lam)
            data[lam] = data.get(lam, Fraction(0)) + Fraction(c)
        self._support = {k: v for k, v in data.items() if v != 0}

    @classmethod
    def unit(cls, basis: str, lam) -> "BasisVector":
        return cls(basis, {Partition(lam): 1})

    @property
    def support(self) -> dict[Partition, Fraction]:
        return dict(self._support)

    def __getitem__(self, lam) -> Fraction:
        return self._support.get(Partition(lam), Fraction(0))

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self._support, key=partition_key))

    def items(self):
        return [(lam, self._support[lam]) for lam in self]

    def __len__(self):
        return len(self._support)

    def __bool__(self):
        return bool(self._support)

    def _check(self, other: "BasisVector"):
        if not isinstance(other, BasisVector):
            raise TypeError(f"cannot combine BasisVector with {type(other).__name__}")
        if other.basis != self.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other: "BasisVector") -> "BasisVector":
        self._check(other)
        out = dict(self._support)
        for k, v in other._support.items():
            out[k] = out.get(k, Fraction(0)) + v
        return BasisVector(self.basis, out)

    def __neg__(self):
        return BasisVector(self.basis, {k: -v for k, v in self._support.items()})

    def __sub__(self, other: "BasisVector") -> "BasisVector":
        return self + (-other)

    def __mul__(self, c) -> "BasisVector":
        if isinstance(c, BasisVector):
            return NotImplemented
        c = Fraction(c)
        return BasisVector(self.basis, {k: c * v for k, v in self._support.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BasisVector):
            return NotImplemented
        return self.basis == other.basis and self._support == other._support

    def truncate(self, max_size: int) -> "BasisVector":
        return BasisVector(self.basis, {k: v for k, v in self._support.items() if k.size <= max_size})

    def degree_range(self) -> tuple[int, int] | None:
        if not self._support:
            return None
        sizes = [k.size for k in self._support]
        return min(sizes), max(sizes)

    def map_keys(self, f) -> "BasisVector":
        return BasisVector(self.basis, [(f(k), v) for k, v in self._support.items()])

    def retag(self, basis: str) -> "BasisVector":
        return BasisVector(basis, self._support)

    def __repr__(self):
        body = " + ".join(f"{v}*{self.basis}[{','.join(map(str, k)) or '-'}]" for k, v in self.items())
        return f"BasisVector({body or '0'})"
