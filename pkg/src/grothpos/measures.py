"""The filtered Young graph, harmonic functions on it, and probability measures on partitions."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .groth import gdual
from .intervals import Interval, SpecValue, lower, upper
from .polyring import to_schur
from .shapes import (
    EMPTY,
    Partition,
    add_cell,
    format_partition,
    outer_corners,
    partition_key,
    partitions,
    partitions_between,
    partitions_upto,
    staircase,
)
from .special import GammaSpec, gamma_value, schur_value
from .tableaux import count_increasing, count_ssvt, rook_strip_extensions


def _fmt(v) -> object:
    if isinstance(v, Interval):
        return {"lo": _fmt(v.lo), "hi": _fmt(v.hi)}
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass
class MeasureTable:
    """``partition -> probability`` plus a little metadata about how it was built."""

    support: dict
    meta: dict = field(default_factory=dict)

    def items(self):
        return sorted(self.support.items(), key=lambda kv: partition_key(kv[0]))

    def __getitem__(self, lam) -> SpecValue:
        return self.support.get(Partition(lam), Fraction(0))

    def total(self) -> SpecValue:
        out: SpecValue = Fraction(0)
        for _, v in self.items():
            out = out + v
        return out

    def is_normalized(self) -> bool:
        t = self.total()
        return lower(t) <= 1 <= upper(t)

    def is_exact(self) -> bool:
        return not any(isinstance(v, Interval) for v in self.support.values())

    def nonnegative(self) -> bool:
        return all(upper(v) >= 0 and (isinstance(v, Interval) or v >= 0) for v in self.support.values())

    def to_json(self) -> list[dict]:
        return [{"partition": format_partition(lam), "value": _fmt(v)} for lam, v in self.items()]


# --- filtered Young graph ---------------------------------------------------------

def rook_successors(lam) -> list[Partition]:
    """Targets of arcs ``λ -> μ``: ``μ/λ`` a nonempty rook strip."""
    lam = Partition(lam)
    return sorted((mu for mu in rook_strip_extensions(lam) if mu != lam), key=partition_key)


@dataclass(frozen=True)
class HarmonicityResult:
    passed: bool
    failure: tuple | None = None  # (λ, φ(λ), Σ φ(μ))


def harmonicity_check(values: Mapping | Callable[[Partition], SpecValue], rank_cap: int) -> HarmonicityResult:
    """``φ(∅) = 1`` and ``φ(λ) = Σ_{λ->μ} φ(μ)`` for every ``λ`` whose successors have size ``<= rank_cap``."""
    if callable(values):
        cache: dict = {}

        def val(lam):
            if lam not in cache:
                cache[lam] = values(lam)
            return cache[lam]
    else:
        table = {Partition(k): v for k, v in values.items()}

        def val(lam):
            if lam not in table:
                raise KeyError(f"no value supplied for {lam}")
            return table[lam]

    root = val(EMPTY)
    if not (lower(root) <= 1 <= upper(root)):
        return HarmonicityResult(False, (EMPTY, root, Fraction(1)))
    for lam in partitions_upto(rank_cap):
        if lam.size + len(lam) + 1 > rank_cap:
            continue
        lhs = val(lam)
        rhs: SpecValue = Fraction(0)
        for mu in rook_successors(lam):
            rhs = rhs + val(mu)
        exact = not isinstance(lhs, Interval) and not isinstance(rhs, Interval)
        if (exact and lhs != rhs) or (not exact and (upper(lhs) < lower(rhs) or upper(rhs) < lower(lhs))):
            return HarmonicityResult(False, (lam, lhs, rhs))
    return HarmonicityResult(True)


# --- corner growth ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _corner_growth(n: int) -> tuple:
    layer = {Partition([1]): Fraction(1)}
    for _ in range(n - 1):
        nxt: dict[Partition, Fraction] = {}
        for lam, p in layer.items():
            corners = outer_corners(lam)
            share = p / len(corners)
            for cell in corners:
                mu = add_cell(lam, cell)
                nxt[mu] = nxt.get(mu, Fraction(0)) + share
        layer = nxt
    return tuple(layer.items())


def corner_growth(n: int) -> MeasureTable:
    """``p_n``: distribution after ``n`` steps of adding a uniformly chosen outer corner."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return MeasureTable(dict(_corner_growth(n)), {"kind": "corner-growth", "n": n})


@lru_cache(maxsize=None)
def _dual_schur(lam: Partition) -> tuple:
    d = max(lam.size, 1)
    return tuple(to_schur(gdual(lam, EMPTY, d, d)).items())


def g_value(hvals: Sequence, lam) -> SpecValue:
    """``ρ(g_λ)`` from the Schur expansion of ``g_λ`` and Jacobi-Trudi on the h-values."""
    total: SpecValue = Fraction(0)
    for mu, c in _dual_schur(Partition(lam)):
        total = total + c * schur_value(hvals, mu)
    return total


def corner_measure(hvals: Sequence, n: int) -> MeasureTable:
    """``μ_{ρ,n}(λ) = p_n(λ) ρ(g_λ)`` for ``λ ⊢ n``."""
    hvals = list(hvals)
    if len(hvals) < 2 or hvals[1] != 1:
        raise ValueError("corner measure needs a normalized specialization (h_1 = 1)")
    if len(hvals) <= n:
        raise ValueError(f"need h-values up to index {n}")
    p = corner_growth(n)
    table = {lam: pr * g_value(hvals, lam) for lam, pr in p.items()}
    return MeasureTable(table, {"kind": "corner", "n": n})


# --- Hecke-type measures ----------------------------------------------------------

def hecke_measure(spec: GammaSpec, n: int) -> MeasureTable:
    """``M_{φ,n}(λ) = d^λ(n) G̃_λ(φ) / Δ^n`` with ``Δ = 1 + G̃_(1)(φ)``, over ``λ ⊆ δ_n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    delta = 1 + gamma_value(spec, (1,))
    if lower(delta) <= 0 <= upper(delta):
        raise ZeroDivisionError("Δ is indistinguishable from 0")
    scale = delta ** n
    table = {}
    for lam in partitions_between(EMPTY, staircase(n)):
        d = count_increasing(lam, n)
        if not d:
            continue
        v = gamma_value(spec, lam)
        if isinstance(v, Interval) or v != 0:
            table[lam] = d * v / scale
    return MeasureTable(table, {"kind": "hecke", "n": n})


def plancherel_hecke(m: int, n: int) -> MeasureTable:
    """``μ_{m,n}(λ) = d^λ(n) e^λ(m) / n^m`` over ``λ ⊆ δ_n`` with ``|λ| <= m``."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be at least 1")
    table = {}
    for lam in partitions_between(EMPTY, staircase(n)):
        if lam.size > m:
            continue
        w = count_increasing(lam, n) * count_ssvt(lam, m)
        if w:
            table[lam] = Fraction(w, n ** m)
    return MeasureTable(table, {"kind": "plancherel-hecke", "m": m, "n": n})


def hecke_weight_total(m: int, n: int) -> int:
    """``Σ_λ d^λ(n) e^λ(m)``, which should equal ``n^m``."""
    return sum(
        count_increasing(lam, n) * count_ssvt(lam, m)
        for lam in partitions_between(EMPTY, staircase(n))
        if lam.size <= m
    )


def plancherel_h_values(n: int, gamma=1) -> list[Fraction]:
    """``h_k = γ^k / k!``."""
    out, t = [], Fraction(1)
    for k in range(n + 1):
        out.append(t)
        t = t * Fraction(gamma) / (k + 1)
    return out


def all_partitions_of(n: int) -> list[Partition]:
    return list(partitions(n))
