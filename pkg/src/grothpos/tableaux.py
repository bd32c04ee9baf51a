"""Enumerators and counters for the tableau families used throughout the package.

All counters are pure; memo tables live inside a single call.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Callable, Iterator, Mapping

from .shapes import (
    EMPTY,
    Cell,
    ExtendedSkewShape,
    Partition,
    conjugate,
    inner_corners,
    outer_corners,
    skew_cells,
    strip_classify,
)


@dataclass(frozen=True)
class SetValuedTableau:
    shape: ExtendedSkewShape
    entries: Mapping[Cell, frozenset] = field(hash=False)

    @property
    def size(self) -> int:
        """Total number of entries ``|T|``."""
        return sum(len(s) for s in self.entries.values())

    def content(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for s in self.entries.values():
            for a in s:
                out[a] = out.get(a, 0) + 1
        return out

    def __hash__(self):
        return hash((self.shape, tuple(sorted((c, tuple(sorted(s))) for c, s in self.entries.items()))))


@dataclass(frozen=True)
class TableauCountTable:
    family: str
    params: tuple
    value: int


def _colex_subsets(n: int, allow_empty: bool) -> list[frozenset]:
    subsets = [frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(1, n + 1), k)]
    subsets.sort(key=lambda s: sorted(s, reverse=True))
    return [s for s in subsets if s or allow_empty]


def enumerate_svt(shape: ExtendedSkewShape, max_entry: int) -> Iterator[SetValuedTableau]:
    """Stream every set-valued tableau of ``shape`` with entries at most ``max_entry``.

    Cells are filled in row-major order; each cell runs through its admissible
    sets in colex order, so the stream order is deterministic.
    """
    if max_entry < 0:
        raise ValueError("max_entry must be nonnegative")
    corners = shape.corner_boxes
    cells = shape.cells()
    cellset = set(cells)
    choices = {
        True: _colex_subsets(max_entry, allow_empty=True),
        False: _colex_subsets(max_entry, allow_empty=False),
    }
    filling: dict[Cell, frozenset] = {}

    def ok(cell, s):
        if not s:
            return True
        i, j = cell
        left, up = (i, j - 1), (i - 1, j)
        if left in cellset and filling.get(left) and max(filling[left]) > min(s):
            return False
        if up in cellset and filling.get(up) and max(filling[up]) >= min(s):
            return False
        return True

    def rec(k):
        if k == len(cells):
            yield SetValuedTableau(shape, dict(filling))
            return
        cell = cells[k]
        for s in choices[cell in corners]:
            if ok(cell, s):
                filling[cell] = s
                yield from rec(k + 1)
                del filling[cell]

    yield from rec(0)


# --- generic single-valued fillings ---------------------------------------------

Cmp = Callable[[int, int], bool]


def _count_fillings(
    cells: list[Cell],
    value_range: Callable[[Cell], tuple[int, int]],
    row_ok: Cmp,
    col_ok: Cmp,
) -> int:
    """Count fillings of ``cells`` (row-major) with ``row_ok(left, x)`` and ``col_ok(up, x)``."""
    cellset = set(cells)
    ranges = [value_range(c) for c in cells]
    if any(lo > hi for lo, hi in ranges):
        return 0
    filling: dict[Cell, int] = {}

    def rec(k):
        if k == len(cells):
            return 1
        (i, j), (lo, hi) = cells[k], ranges[k]
        left, up = (i, j - 1), (i - 1, j)
        total = 0
        for x in range(lo, hi + 1):
            if left in cellset and not row_ok(filling[left], x):
                continue
            if up in cellset and not col_ok(filling[up], x):
                continue
            filling[cells[k]] = x
            total += rec(k + 1)
        filling.pop(cells[k], None)
        return total

    return rec(0)


def count_strict_elegant(mu: Partition, lam: Partition) -> int:
    """``r_{mu/lam}``: strictly increasing fillings of ``mu/lam`` with row ``i`` in ``[1, i-1]``."""
    mu, lam = Partition(mu), Partition(lam)
    if not mu.contains(lam):
        return 0
    return _count_fillings(
        skew_cells(mu, lam), lambda c: (1, c[0] - 1), lambda a, b: a < b, lambda a, b: a < b
    )


def count_elegant(mu: Partition, lam: Partition) -> int:
    """``f_{mu/lam}``: semistandard fillings of ``mu/lam`` with row ``i`` in ``[1, i-1]``."""
    mu, lam = Partition(mu), Partition(lam)
    if not mu.contains(lam):
        return 0
    return _count_fillings(
        skew_cells(mu, lam), lambda c: (1, c[0] - 1), lambda a, b: a <= b, lambda a, b: a < b
    )


def count_delegant(nu: Partition, mu: Partition) -> int:
    """``d_{nu/mu}``: rows weakly decrease, columns strictly decrease, row ``i`` in
    ``[nu_i, l + 1 + mu_i - i]`` with ``l = l(mu)``."""
    nu, mu = Partition(nu), Partition(mu)
    ell = len(mu)
    if len(nu) != ell or not nu.contains(mu):
        return 0
    return _count_fillings(
        skew_cells(nu, mu),
        lambda c: (nu.part(c[0]), ell + 1 + mu.part(c[0]) - c[0]),
        lambda a, b: a >= b,
        lambda a, b: a > b,
    )


def count_increasing_bruteforce(lam: Partition, n: int) -> int:
    lam = Partition(lam)
    return _count_fillings(lam.cells(), lambda c: (1, n), lambda a, b: a < b, lambda a, b: a < b)


# --- binomial determinants -------------------------------------------------------

def gbinom(n: int, k: int) -> int:
    """Generalized binomial ``n(n-1)...(n-k+1)/k!``; zero for ``k < 0``."""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    num = 1
    for t in range(k):
        num *= n - t
    return num // factorial(k)


def int_det(rows: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def delegant_det(nu: Partition, mu: Partition) -> int:
    """``det[C(l-i+1, nu_i - i - mu_j + j)]``, the lattice-path count of delegant tableaux."""
    nu, mu = Partition(nu), Partition(mu)
    ell = len(mu)
    if len(nu) != ell:
        return 0
    return int_det(
        [[gbinom(ell - i + 1, nu.part(i) - i - mu.part(j) + j) for j in range(1, ell + 1)] for i in range(1, ell + 1)]
    )


def elegant_det(nu: Partition, lam: Partition) -> int:
    """``det[C(nu_i - lam_j + j - 2, nu_i - i - lam_j + j)]`` over ``1 <= i, j <= l(nu)``."""
    nu, lam = Partition(nu), Partition(lam)
    if not nu.contains(lam):
        return 0
    n = len(nu)
    return int_det(
        [[gbinom(nu.part(i) - lam.part(j) + j - 2, nu.part(i) - i - lam.part(j) + j) for j in range(1, n + 1)]
         for i in range(1, n + 1)]
    )


# --- standard, increasing and standard set-valued tableaux -----------------------

def hook_length_count(lam: Partition) -> int:
    lam = Partition(lam)
    conj = conjugate(lam)
    denom = 1
    for i, j in lam.cells():
        denom *= (lam.part(i) - j) + (conj.part(j) - i) + 1
    return factorial(lam.size) // denom


def count_syt_enumerate(lam: Partition) -> int:
    """Count SYT by removing the largest entry from each inner corner in turn."""
    memo: dict[Partition, int] = {EMPTY: 1}

    def rec(kappa):
        if kappa not in memo:
            total = 0
            for i, _ in inner_corners(kappa):
                parts = list(kappa)
                parts[i - 1] -= 1
                total += rec(Partition(parts))
            memo[kappa] = total
        return memo[kappa]

    return rec(Partition(lam))


def count_syt(lam: Partition) -> int:
    """``f^lam``; the hook-length product is cross-checked against enumeration."""
    h = hook_length_count(lam)
    e = count_syt_enumerate(lam)
    if h != e:
        raise ArithmeticError(f"hook length {h} != enumeration {e} for {lam}")
    return h


def rook_strip_extensions(kappa: Partition, within: Partition | None = None) -> list[Partition]:
    """All ``nu ⊇ kappa`` (including ``kappa``) with ``nu/kappa`` a rook strip."""
    kappa = Partition(kappa)
    rows = len(kappa) + 1
    out = []
    for bumps in itertools.product((0, 1), repeat=rows):
        parts = [kappa.part(i + 1) + b for i, b in enumerate(bumps)]
        if any(parts[i] < parts[i + 1] for i in range(rows - 1)):
            continue
        nu = Partition(parts)
        if within is not None and not within.contains(nu):
            continue
        if strip_classify(nu, kappa).rook:
            out.append(nu)
    return out


def count_increasing(lam: Partition, n: int) -> int:
    """``d^lam(n)``: increasing tableaux of shape ``lam`` with entries in ``{1..n}``.

    Each value occupies a rook strip, so the count is the number of chains
    ``∅ ⊆ κ_1 ⊆ ... ⊆ κ_n = lam`` with rook-strip steps.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    lam = Partition(lam)
    layer = {EMPTY: 1}
    for _ in range(n):
        nxt: dict[Partition, int] = {}
        for kappa, c in layer.items():
            for nu in rook_strip_extensions(kappa, within=lam):
                nxt[nu] = nxt.get(nu, 0) + c
        layer = nxt
    return layer.get(lam, 0)


def count_ssvt(lam: Partition, m: int) -> int:
    """``e^lam(m)``: standard set-valued tableaux using each of ``1..m`` exactly once.

    Labels are placed in increasing order; label ``k`` either opens an outer
    corner or joins an inner corner (the only cells with no occupied right or
    lower neighbour).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    lam = Partition(lam)
    layer = {EMPTY: 1}
    for _ in range(m):
        nxt: dict[Partition, int] = {}
        for kappa, c in layer.items():
            stay = len(inner_corners(kappa))
            if stay:
                nxt[kappa] = nxt.get(kappa, 0) + c * stay
            for i, j in outer_corners(kappa):
                parts = list(kappa) + [0]
                parts[i - 1] += 1
                nu = Partition(parts)
                if lam.contains(nu):
                    nxt[nu] = nxt.get(nu, 0) + c
        layer = nxt
    return layer.get(lam, 0)


# --- content-graded counts (monomial coefficients) ------------------------------

def kostka(lam: Partition, nu: Partition) -> int:
    """Number of SSYT of shape ``lam`` and content ``nu`` (any composition order)."""
    lam = Partition(lam)
    nu = tuple(nu)
    if lam.size != sum(nu):
        return 0
    memo: dict[tuple, int] = {}

    def rec(kappa: Partition, k: int) -> int:
        if k == 0:
            return 1 if not kappa else 0
        key = (kappa, k)
        if key in memo:
            return memo[key]
        total = 0
        for inner in _horizontal_strip_removals(kappa, nu[k - 1]):
            total += rec(inner, k - 1)
        memo[key] = total
        return total

    return rec(lam, len(nu))


def _horizontal_strip_removals(kappa: Partition, size: int) -> list[Partition]:
    """All ``inner`` with ``kappa/inner`` a horizontal strip of the given size."""
    out = []
    n = len(kappa)

    def rec(i, left, acc):
        if i == n:
            if left == 0:
                out.append(Partition(acc))
            return
        nxt = kappa.part(i + 2)
        for take in range(0, min(left, kappa[i] - nxt) + 1):
            rec(i + 1, left - take, acc + [kappa[i] - take])

    rec(0, size, [])
    return out


def svt_content_counts(shape: ExtendedSkewShape, nvars: int, degcap: int) -> dict[Partition, int]:
    """Map ``nu -> #{SVT of shape with content exactly nu}`` for partitions ``nu``
    with at most ``nvars`` parts and ``|nu| <= degcap``.

    These are the monomial-symmetric coefficients of the set-valued generating
    function.  Letters are placed one at a time; the state is the set of cells
    already holding a smaller letter.
    """
    cells = shape.cells()
    corners = shape.corner_boxes
    index = {c: k for k, c in enumerate(cells)}
    n = len(cells)
    right = [index.get((i, j + 1), -1) for i, j in cells]
    below = [index.get((i + 1, j), -1) for i, j in cells]
    left_req = [index.get((i, j - 1), -1) if (i, j - 1) not in corners else -1 for i, j in cells]
    up_req = [index.get((i - 1, j), -1) if (i - 1, j) not in corners else -1 for i, j in cells]
    skew_mask = sum(1 << k for k, c in enumerate(cells) if c not in corners)
    memo: dict[tuple, dict] = {}

    def bit(k):
        return 0 if k < 0 else 1 << k

    def steps(occ: int, cap: int):
        """Yield (new_occ, size) for every admissible set of cells receiving the next letter."""
        cand = [
            k for k in range(n)
            if not (occ & bit(right[k])) and not (occ & bit(below[k]))
            and (occ >> k & 1 or up_req[k] < 0 or occ & bit(up_req[k]))
        ]
        for size in range(1, min(cap, len(cand)) + 1):
            for combo in itertools.combinations(cand, size):
                s = 0
                for k in combo:
                    s |= 1 << k
                if any(s & bit(below[k]) for k in combo):
                    continue
                if any(not (occ >> k & 1) and left_req[k] >= 0 and not ((occ | s) & bit(left_req[k])) for k in combo):
                    continue
                yield occ | s, size

    def rec(occ: int, cap: int, slots: int, budget: int) -> dict:
        key = (occ, cap, slots, budget)
        if key in memo:
            return memo[key]
        out: dict[tuple, int] = {}
        if occ & skew_mask == skew_mask:
            out[()] = 1
        if slots > 0:
            for nxt, size in steps(occ, min(cap, budget)):
                for tail, c in rec(nxt, size, slots - 1, budget - size).items():
                    kk = (size,) + tail
                    out[kk] = out.get(kk, 0) + c
        memo[key] = out
        return out

    res = rec(0, degcap, nvars, degcap)
    return {Partition(k): v for k, v in res.items()}


def rpp_content_counts(outer: Partition, inner: Partition, nvars: int, degcap: int) -> dict[Partition, int]:
    """Monomial-symmetric coefficients of the reverse-plane-partition generating
    function of ``outer/inner``, where letter ``i`` is weighted by the number of
    columns containing it."""
    cells = skew_cells(outer, inner)
    index = {c: k for k, c in enumerate(cells)}
    n = len(cells)
    preds = [[index[p] for p in ((i, j - 1), (i - 1, j)) if p in index] for i, j in cells]
    cols = [j for _, j in cells]
    full = (1 << n) - 1
    memo: dict[tuple, dict] = {}

    def extensions(occ: int):
        free = [k for k in range(n) if not occ >> k & 1]
        for size in range(1, len(free) + 1):
            for combo in itertools.combinations(free, size):
                s = occ
                for k in combo:
                    s |= 1 << k
                if all(all(s >> p & 1 for p in preds[k]) for k in combo):
                    yield s, len({cols[k] for k in combo})

    def rec(occ, cap, slots, budget):
        key = (occ, cap, slots, budget)
        if key in memo:
            return memo[key]
        out: dict[tuple, int] = {}
        if occ == full:
            out[()] = 1
        elif slots > 0:
            for nxt, w in extensions(occ):
                if w > cap or w > budget:
                    continue
                for tail, c in rec(nxt, w, slots - 1, budget - w).items():
                    kk = (w,) + tail
                    out[kk] = out.get(kk, 0) + c
        memo[key] = out
        return out

    res = rec(0, degcap, nvars, degcap)
    return {Partition(k): v for k, v in res.items()}


FAMILIES = ("r", "f", "d", "syt", "inc", "ssvt", "kostka")


def count(family: str, **params) -> TableauCountTable:
    """Dispatch to one of the counters by family tag (used by the command line)."""
    if family == "r":
        v = count_strict_elegant(params["mu"], params["lam"])
        key = (params["mu"], params["lam"])
    elif family == "f":
        v = count_elegant(params["mu"], params["lam"])
        key = (params["mu"], params["lam"])
    elif family == "d":
        v = count_delegant(params["nu"], params["mu"])
        key = (params["nu"], params["mu"])
    elif family == "syt":
        v = count_syt(params["lam"])
        key = (params["lam"],)
    elif family == "inc":
        v = count_increasing(params["lam"], params["n"])
        key = (params["lam"], params["n"])
    elif family == "ssvt":
        v = count_ssvt(params["lam"], params["m"])
        key = (params["lam"], params["m"])
    elif family == "kostka":
        v = kostka(params["lam"], params["nu"])
        key = (params["lam"], params["nu"])
    else:
        raise ValueError(f"unknown tableau family {family!r}; expected one of {FAMILIES}")
    return TableauCountTable(family, key, v)
