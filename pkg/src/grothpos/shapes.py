"""Partitions, Young diagrams and (extended) skew shapes.

Cells are 1-indexed ``(row, col)`` pairs, rows counted top to bottom and
columns left to right (English notation).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

Cell = tuple[int, int]


class Partition(tuple):
    """An integer partition stored as a weakly decreasing tuple of positive parts.

    Trailing zeros are dropped so that every partition has a unique key; the
    empty partition is ``Partition()``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must weakly decrease: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """Row length of (1-indexed) row ``i``; zero beyond the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> list[Cell]:
        return [(i + 1, j + 1) for i, p in enumerate(self) for j in range(p)]

    def contains(self, other: "Partition") -> bool:
        """Cellwise containment ``other ⊆ self``."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def sort_key(self):
        return partition_key(self)

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)})"

    # tuple's + and * would produce invalid partitions silently
    def __add__(self, other):
        return NotImplemented

    def __mul__(self, other):
        return NotImplemented


EMPTY = Partition()


def partition_key(lam: Partition):
    """Canonical total order: graded by size, then reverse-lexicographic."""
    return (sum(lam), tuple(-p for p in lam))


def sort_partitions(parts: Iterable[Partition]) -> list[Partition]:
    return sorted(parts, key=partition_key)


def parse_partition(text: str) -> Partition:
    """Parse ``"5,3,3,1"``; ``"-"`` (or an empty string) is the empty partition."""
    text = text.strip()
    if text in ("", "-", "∅"):
        return EMPTY
    try:
        return Partition(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}: {exc}") from None


def format_partition(lam: Iterable[int]) -> str:
    lam = tuple(lam)
    return ",".join(str(p) for p in lam) if lam else "-"


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def partitions(n: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        return
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(rest, cap, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    for parts in rec(n, max_part, max_length):
        yield Partition(parts)


def partitions_upto(n: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of size at most ``n``, in canonical order."""
    return [lam for k in range(n + 1) for lam in partitions(k, max_length=max_length)]


def staircase(n: int) -> Partition:
    if n < 0:
        raise ValueError("staircase size must be nonnegative")
    return Partition(range(n, 0, -1))


def inner_corners(lam: Partition) -> set[Cell]:
    """Removable boxes ``(i, λ_i)`` with ``λ_i > λ_{i+1}``."""
    lam = Partition(lam)
    return {(i, lam.part(i)) for i in range(1, len(lam) + 1) if lam.part(i) > lam.part(i + 1)}


def outer_corners(lam: Partition) -> set[Cell]:
    """Addable boxes: cells whose addition to ``lam`` is again a partition."""
    lam = Partition(lam)
    return {(i, lam.part(i) + 1) for i in range(1, len(lam) + 2) if i == 1 or lam.part(i - 1) > lam.part(i)}


def add_cell(lam: Partition, cell: Cell) -> Partition:
    i, j = cell
    parts = list(lam) + [0]
    if parts[i - 1] != j - 1:
        raise ValueError(f"cell {cell} is not addable to {lam}")
    parts[i - 1] += 1
    return Partition(parts)


def skew_cells(outer: Partition, inner: Partition) -> list[Cell]:
    """Cells of ``outer/inner`` in row-major order (empty if not contained)."""
    outer, inner = Partition(outer), Partition(inner)
    if not outer.contains(inner):
        return []
    return [(i, j) for i in range(1, len(outer) + 1) for j in range(inner.part(i) + 1, outer.part(i) + 1)]


def skew_columns(outer: Partition, inner: Partition) -> set[int]:
    return {j for _, j in skew_cells(outer, inner)}


def skew_rows(outer: Partition, inner: Partition) -> set[int]:
    return {i for i, _ in skew_cells(outer, inner)}


class StripInfo(NamedTuple):
    contained: bool
    horizontal: bool
    vertical: bool
    rook: bool

    @property
    def kind(self) -> str:
        if not self.contained:
            return "not_contained"
        if self.rook:
            return "rook"
        if self.horizontal:
            return "horizontal"
        if self.vertical:
            return "vertical"
        return "general"


def strip_classify(lam: Partition, mu: Partition) -> StripInfo:
    """Classify ``lam/mu``; rook strips are reported as both horizontal and vertical."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return StripInfo(False, False, False, False)
    cells = skew_cells(lam, mu)
    cols = {j for _, j in cells}
    rows = {i for i, _ in cells}
    horizontal = len(cols) == len(cells)
    vertical = len(rows) == len(cells)
    return StripInfo(True, horizontal, vertical, horizontal and vertical)


def is_horizontal_strip(lam: Partition, mu: Partition) -> bool:
    s = strip_classify(lam, mu)
    return s.contained and s.horizontal


class ExtendedStats(NamedTuple):
    a: int
    c: int
    r: int
    boxes: int


@dataclass(frozen=True)
class ExtendedSkewShape:
    """The shape ``outer//inner``: the skew shape plus the inner corners of ``inner``."""

    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def corner_boxes(self) -> frozenset[Cell]:
        return frozenset(inner_corners(self.inner))

    def skew_cells(self) -> list[Cell]:
        return skew_cells(self.outer, self.inner)

    def cells(self) -> list[Cell]:
        """All cells (skew cells and corner boxes), row-major."""
        return sorted(set(self.skew_cells()) | self.corner_boxes)

    def conjugate(self) -> "ExtendedSkewShape":
        return ExtendedSkewShape(conjugate(self.outer), conjugate(self.inner))

    @property
    def stats(self) -> ExtendedStats:
        return extended_stats(self)

    def __str__(self) -> str:
        return f"{format_partition(self.outer)}//{format_partition(self.inner)}"


def extended_stats(shape: ExtendedSkewShape) -> ExtendedStats:
    skew = shape.skew_cells()
    cols = {j for _, j in skew}
    rows = {i for i, _ in skew}
    all_cols = cols | {j for _, j in shape.corner_boxes}
    return ExtendedStats(a=len(all_cols - cols), c=len(cols), r=len(rows), boxes=len(skew))


def partitions_between(inner: Partition, outer: Partition) -> list[Partition]:
    """All ``nu`` with ``inner ⊆ nu ⊆ outer``, canonical order."""
    inner, outer = Partition(inner), Partition(outer)
    if not outer.contains(inner):
        return []
    n = len(outer)
    found = []

    def rec(i, prev, acc):
        if i == n:
            found.append(Partition(acc))
            return
        lo = inner.part(i + 1)
        hi = min(outer[i], prev)
        for v in range(lo, hi + 1):
            rec(i + 1, v, acc + [v])

    rec(0, outer.part(1), [])
    return sort_partitions(found)


def partitions_containing(inner: Partition, max_size: int) -> list[Partition]:
    """All ``lam ⊇ inner`` with ``|lam| <= max_size``, canonical order."""
    inner = Partition(inner)
    return [lam for lam in partitions_upto(max_size) if lam.contains(inner)]
