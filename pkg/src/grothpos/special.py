"""Specializations: Edrei-Thoma homomorphisms of Λ, their extensions to the ring spanned by G̃,
signed-family values, and the g-positive class.

h-value sequences are plain lists ``[h_0, h_1, ..., h_N]`` with ``h_0 = 1``.
Values are exact :class:`~fractions.Fraction` whenever possible and
:class:`~grothpos.intervals.Interval` when ``e^γ`` is involved.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .groth import schur_expansion_gtilde, skew_expansion
from .intervals import Interval, SpecValue, exp_interval, lower, upper
from .polyring import PowerSeries, jacobi_trudi, newton_convert
from .shapes import (
    EMPTY,
    ExtendedSkewShape,
    Partition,
    conjugate,
    extended_stats,
    partitions_between,
    partitions_upto,
    strip_classify,
)
from .tableaux import gbinom

DEFAULT_TRUNCATION = 12


def parse_rational(text) -> Fraction:
    """``"3/4"``, ``"2"``, ``"0.25"`` or an int; floats are rejected to keep values exact."""
    if isinstance(text, float):
        raise TypeError("pass rationals as strings like '1/3', not floats")
    return Fraction(text)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# --- parameters ---------------------------------------------------------------------

@dataclass(frozen=True)
class EdreiThomaParams:
    """Finite lists of nonnegative ``α`` and ``β`` plus ``γ`` (and ``δ`` for the g-positive class)."""

    alphas: tuple = ()
    betas: tuple = ()
    gamma: Fraction = Fraction(0)
    delta: Fraction = Fraction(0)

    def __post_init__(self):
        alphas = tuple(parse_rational(a) for a in self.alphas)
        betas = tuple(parse_rational(b) for b in self.betas)
        gamma, delta = parse_rational(self.gamma), parse_rational(self.delta)
        if any(x < 0 for x in alphas + betas + (gamma, delta)):
            raise ValueError("Edrei-Thoma parameters must be nonnegative")
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "betas", betas)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "delta", delta)

    def to_json(self) -> dict:
        return {
            "alphas": [format_rational(a) for a in self.alphas],
            "betas": [format_rational(b) for b in self.betas],
            "gamma": format_rational(self.gamma),
            "delta": format_rational(self.delta),
        }

    @classmethod
    def from_json(cls, data: dict) -> "EdreiThomaParams":
        unknown = set(data) - {"alphas", "betas", "gamma", "delta"}
        if unknown:
            raise ValueError(f"unknown parameter keys: {sorted(unknown)}")
        return cls(
            tuple(data.get("alphas", ())),
            tuple(data.get("betas", ())),
            data.get("gamma", 0),
            data.get("delta", 0),
        )

    @classmethod
    def load(cls, path) -> "EdreiThomaParams":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


# --- specializations of Λ -----------------------------------------------------------

def lambda_series(p: EdreiThomaParams, cap: int) -> PowerSeries:
    """``e^{γz} Π(1+β z)/(1-α z)``."""
    if p.delta:
        raise ValueError("δ belongs to the g-positive class; use g_spec_h_values")
    ser = PowerSeries.exp_linear(p.gamma, cap)
    for a in p.alphas:
        ser = ser * PowerSeries.geometric(a, cap)
    for b in p.betas:
        ser = ser * PowerSeries([1, b], cap)
    return ser


def lambda_e_series(p: EdreiThomaParams, cap: int) -> PowerSeries:
    """``ρ(E(z)) = e^{γz} Π(1+α z)/(1-β z)``."""
    swapped = EdreiThomaParams(p.betas, p.alphas, p.gamma)
    return lambda_series(swapped, cap)


def lambda_h_values(p: EdreiThomaParams, n: int) -> list[Fraction]:
    """``[h_0, ..., h_N]`` for ``ρ(H(z)) = e^{γz} Π(1+β z)/(1-α z)``."""
    if n < 1:
        raise ValueError("N must be at least 1")
    return list(lambda_series(p, n).coeffs)


def g_spec_h_values(p: EdreiThomaParams, n: int) -> list[Fraction]:
    """``[h_0, ..., h_N]`` for ``e^{γz + δz/(1-z)} Π 1/(1-α z) Π (1 + β z/(1-z))``."""
    if n < 1:
        raise ValueError("N must be at least 1")
    ser = PowerSeries.exp_linear(p.gamma, n)
    ser = ser * (PowerSeries.z_over_one_minus_z(n) * p.delta).exp()
    for a in p.alphas:
        ser = ser * PowerSeries.geometric(a, n)
    for b in p.betas:
        ser = ser * PowerSeries([1] + [b] * n, n)
    return list(ser.coeffs)


def schur_value(hvals: Sequence, lam) -> SpecValue:
    """``ρ(s_λ)`` by Jacobi-Trudi."""
    return jacobi_trudi(Partition(lam), hvals)


def union_specs(seqs: Iterable[Sequence]) -> list:
    """h-values of a union: coefficientwise product of the H-series."""
    seqs = [list(s) for s in seqs]
    if not seqs:
        raise ValueError("need at least one sequence")
    n = len(seqs[0]) - 1
    if any(len(s) != n + 1 for s in seqs):
        raise ValueError("sequences must have a common length")
    out = PowerSeries.one(n)
    for s in seqs:
        out = out * PowerSeries(s, n)
    return list(out.coeffs)


def p_closed_form(p: EdreiThomaParams, k: int, family: str = "lambda") -> Fraction:
    """Power-sum images.

    For the g-positive class a single ``β`` contributes ``1 - (1-β)^k``, the
    logarithmic derivative of ``1 + βz/(1-z)``.
    """
    total = Fraction(0)
    if family == "lambda":
        if k == 1:
            total += p.gamma
        for a in p.alphas:
            total += a ** k
        for b in p.betas:
            total += (-1) ** (k - 1) * b ** k
        return total
    if family == "g":
        if k == 1:
            total += p.gamma
        total += p.delta * k
        for a in p.alphas:
            total += a ** k
        for b in p.betas:
            total += sum((-1) ** (l - 1) * gbinom(k, l) * b ** l for l in range(1, k + 1))
        return total
    raise ValueError("family must be 'lambda' or 'g'")


def p_values_consistency(p: EdreiThomaParams, k: int, family: str = "lambda") -> bool:
    """Newton-converted power sums agree with the closed forms for ``1 <= k <= K``."""
    hv = lambda_h_values(p, k) if family == "lambda" else g_spec_h_values(p, k)
    newton = newton_convert(hv[1:], k, "h")
    return all(newton[j - 1] == p_closed_form(p, j, family) for j in range(1, k + 1))


# --- extending Λ-specializations ------------------------------------------------------

def _e_at_one(p: EdreiThomaParams) -> SpecValue:
    """``E(1) = e^γ Π(1+α)/(1-β)``."""
    if any(b >= 1 for b in p.betas):
        raise ValueError("extension needs every β < 1")
    val = Fraction(1)
    for a in p.alphas:
        val *= 1 + a
    for b in p.betas:
        val /= 1 - b
    return exp_interval(p.gamma) * val if p.gamma else val


def extension_tail_bound(p: EdreiThomaParams, n: int, trunc: int) -> SpecValue:
    """Upper bound for ``Σ_{|μ| > M} r_{μ/λ} ρ(s_μ)`` with ``n = |λ|``.

    ``G̃_(1)^n - G̃_λ`` is Schur positive, so the tail is dominated by the tail
    of ``(E(t) - 1)^n`` evaluated at ``t = 1``.
    """
    if n == 0:
        return Fraction(0)
    base = lambda_e_series(p, trunc) - 1
    powered = PowerSeries.one(trunc)
    for _ in range(n):
        powered = powered * base
    head = sum((powered[m] for m in range(trunc + 1)), Fraction(0))
    full = (_e_at_one(p) - 1) ** n
    tail = full - head
    if isinstance(tail, Interval):
        return Interval(max(tail.lo, Fraction(0)), max(tail.hi, Fraction(0)))
    return max(tail, Fraction(0))


def extend_lambda_spec(p: EdreiThomaParams, lam, trunc: int = DEFAULT_TRUNCATION) -> SpecValue:
    """``G̃_λ(ρ̂) = Σ_μ r_{μ/λ} ρ(s_μ)`` as an enclosure: partial sum to ``|μ| <= M`` plus tail bound."""
    lam = Partition(lam)
    if lam.size > trunc:
        raise ValueError("truncation degree must be at least |λ|")
    hv = lambda_h_values(p, max(trunc, 1))
    head = Fraction(0)
    for mu, r in schur_expansion_gtilde(lam, trunc).items():
        head += r * schur_value(hv, mu)
    tail = extension_tail_bound(p, lam.size, trunc)
    if tail == 0:
        return head
    return Interval(head, head + upper(tail))


# --- extended generators on Γ -------------------------------------------------------

GENERATORS = ("phi_hat", "eps_hat", "pi_hat")


@dataclass(frozen=True)
class GammaSpec:
    """Union of extended generators ``φ̂_α``, ``ε̂_β`` and ``π̂_γ``."""

    generators: tuple = ()
    truncation: int = DEFAULT_TRUNCATION
    tolerance: Fraction | None = None
    normalized: bool = False

    def __post_init__(self):
        gens = []
        for kind, val in self.generators:
            if kind not in GENERATORS:
                raise ValueError(f"unknown generator {kind!r}")
            val = parse_rational(val)
            if val < 0:
                raise ValueError("generator parameters must be nonnegative")
            if kind == "eps_hat" and val >= 1:
                raise ValueError("eps_hat needs β < 1")
            gens.append((kind, val))
        object.__setattr__(self, "generators", tuple(gens))
        if self.tolerance is not None:
            object.__setattr__(self, "tolerance", parse_rational(self.tolerance))
        if self.normalized:
            g1 = gamma_value(self, (1,))
            if not (lower(g1) <= 1 <= upper(g1)):
                raise ValueError(f"spec declared normalized but G̃_(1) = {g1}")

    @classmethod
    def from_params(cls, p: EdreiThomaParams, **kw) -> "GammaSpec":
        gens = [("phi_hat", a) for a in p.alphas] + [("eps_hat", b) for b in p.betas]
        if p.gamma:
            gens.append(("pi_hat", p.gamma))
        return cls(tuple(gens), **kw)

    def to_params(self) -> EdreiThomaParams:
        return EdreiThomaParams(
            tuple(v for k, v in self.generators if k == "phi_hat"),
            tuple(v for k, v in self.generators if k == "eps_hat"),
            sum((v for k, v in self.generators if k == "pi_hat"), Fraction(0)),
        )

    @property
    def is_exact(self) -> bool:
        return all(k != "pi_hat" or v == 0 for k, v in self.generators)


def _phi_hat_skew(alpha: Fraction, outer: Partition, inner: Partition) -> Fraction:
    info = strip_classify(outer, inner)
    if not (info.contained and info.horizontal):
        return Fraction(0)
    st = extended_stats(ExtendedSkewShape(outer, inner))
    return (1 + alpha) ** st.a * alpha ** st.boxes


@lru_cache(maxsize=None)
def _generator_skew(kind: str, val: Fraction, outer: Partition, inner: Partition, trunc: int) -> SpecValue:
    if kind == "phi_hat":
        return _phi_hat_skew(val, outer, inner)
    if kind == "eps_hat":
        return _phi_hat_skew(val / (1 - val), conjugate(outer), conjugate(inner))
    # pi_hat: through the finite expansion G̃_{λ//μ} = Σ d_ν G̃_ν
    if val == 0:
        return Fraction(1) if outer == inner else Fraction(0)
    p = EdreiThomaParams(gamma=val)
    total: SpecValue = Fraction(0)
    expansion = {EMPTY: 1} if not outer and not inner else skew_expansion(outer, inner).support
    for nu, d in expansion.items():
        total = total + d * extend_lambda_spec(p, nu, max(trunc, nu.size))
    return total


def _union_value(gens: tuple, outer: Partition, inner: Partition, trunc: int) -> SpecValue:
    if not gens:
        return Fraction(1) if outer == inner else Fraction(0)
    (kind, val), rest = gens[0], gens[1:]
    total: SpecValue = Fraction(0)
    for nu in partitions_between(inner, outer):
        first = _generator_skew(kind, val, outer, nu, trunc)
        if not isinstance(first, Interval) and first == 0:
            continue
        second = _union_value(rest, nu, inner, trunc)
        total = total + first * second
    return total


def gamma_value(spec: GammaSpec, outer, inner=EMPTY) -> SpecValue:
    """``G̃_{λ//μ}(φ)`` for a union of extended generators."""
    outer, inner = Partition(outer), Partition(inner)
    if not outer.contains(inner):
        return Fraction(0)
    val = _union_value(spec.generators, outer, inner, spec.truncation)
    if isinstance(val, Interval) and val.lo == val.hi:
        val = val.lo
    if spec.tolerance is not None and isinstance(val, Interval) and val.width > spec.tolerance:
        raise ValueError(f"interval {val} wider than tolerance {spec.tolerance}; raise the truncation")
    return val


def gtilde_row_values(spec: GammaSpec, n_max: int) -> list:
    """``[1, G̃_(1)(φ), ..., G̃_(n_max)(φ)]``."""
    return [Fraction(1)] + [gamma_value(spec, (n,)) for n in range(1, n_max + 1)]


def induced_schur_spec(spec: GammaSpec, n: int) -> list:
    """``h_n = (G̃_(n)(φ) + G̃_(n+1)(φ)) / (1 + G̃_(1)(φ))`` for ``n = 0..N``."""
    rows = gtilde_row_values(spec, n + 1)
    denom = 1 + rows[1]
    if lower(denom) <= 0 <= upper(denom):
        raise ZeroDivisionError("1 + G̃_(1)(φ) is indistinguishable from 0")
    return [Fraction(1)] + [(rows[k] + rows[k + 1]) / denom for k in range(1, n + 1)]


def row_generating_check(spec: GammaSpec, n_max: int) -> bool:
    """``1 + (z+1) Σ G̃_(n)(φ) z^{n-1} = E(1) · e^{γz} Π 1/(1-αz) Π(1+βz)`` coefficientwise,
    together with ``G̃_(1)(φ) = E(1) - 1``."""
    p = spec.to_params()
    rows = gtilde_row_values(spec, n_max + 1)
    scale = _e_at_one(p)
    rhs = [scale * c for c in lambda_series(p, n_max).coeffs]
    lhs = [1 + rows[1]] + [rows[k] + rows[k + 1] for k in range(1, n_max + 1)]
    checks = list(zip(lhs, rhs)) + [(rows[1], scale - 1)]
    return all(_compatible(a, b) for a, b in checks)


def _compatible(a: SpecValue, b: SpecValue) -> bool:
    """Equal when both exact, overlapping enclosures otherwise."""
    if not isinstance(a, Interval) and not isinstance(b, Interval):
        return a == b
    return lower(a) <= upper(b) and lower(b) <= upper(a)


def union_compatibility_check(p1: EdreiThomaParams, p2: EdreiThomaParams, max_size: int = 4,
                              trunc: int = DEFAULT_TRUNCATION) -> bool:
    """Extension of the union agrees with the union of the extensions on ``G̃_λ``, ``|λ| <= max_size``."""
    s1, s2 = GammaSpec.from_params(p1, truncation=trunc), GammaSpec.from_params(p2, truncation=trunc)
    joint = GammaSpec(s1.generators + s2.generators, truncation=trunc)
    merged = EdreiThomaParams(p1.alphas + p2.alphas, p1.betas + p2.betas, p1.gamma + p2.gamma)
    for lam in partitions_upto(max_size):
        via_union = gamma_value(joint, lam)
        via_ext = extend_lambda_spec(merged, lam, trunc)
        if not _compatible(via_union, via_ext):
            return False
    return True


# --- signed family ----------------------------------------------------------------

def signed_series(p: EdreiThomaParams, cap: int) -> PowerSeries:
    """``e^{γ(z-1)} Π(1-α)/(1-αz) Π(1+βz)/(1+β)``."""
    if any(a > 1 for a in p.alphas):
        raise ValueError("signed extension needs every α <= 1")
    const: SpecValue = Fraction(1)
    for a in p.alphas:
        const *= 1 - a
    for b in p.betas:
        const /= 1 + b
    if p.gamma:
        const = exp_interval(-p.gamma) * const
    return lambda_series(EdreiThomaParams(p.alphas, p.betas, p.gamma), cap) * const


def signed_g_values(p: EdreiThomaParams, n_max: int) -> list:
    """``[G_(0), G_(1)(ρ̂), ..., G_(n_max)(ρ̂)]`` solved from the generating function."""
    ser = signed_series(p, n_max)
    out: list = [Fraction(1)]
    partial: SpecValue = Fraction(0)
    for n in range(1, n_max + 1):
        partial = partial + ser[n - 1]
        out.append(1 - partial)
    return out


def signed_monotone_chain(values: Sequence) -> bool:
    """``1 >= G_(1) >= G_(2) >= ... >= 0`` (an interval fails only when it certainly violates)."""
    vals = list(values)[1:]
    if not vals:
        return True
    if lower(vals[0]) > 1 or upper(vals[-1]) < 0:
        return False
    return all(lower(b) <= upper(a) for a, b in zip(vals, vals[1:]))


def signed_generator_skew(kind: str, val: Fraction, outer: Partition, inner: Partition) -> Fraction:
    """Closed forms ``G_{λ//μ}(φ̂_α) = α^{|λ/μ|}(1-α)^a`` and its conjugate for ``ε̂_β``."""
    if kind == "eps_hat":
        kind, val = "phi_hat", val / (1 + val)
        outer, inner = conjugate(outer), conjugate(inner)
    if kind != "phi_hat":
        raise ValueError("closed forms exist for phi_hat and eps_hat only")
    info = strip_classify(outer, inner)
    if not (info.contained and info.horizontal):
        return Fraction(0)
    st = extended_stats(ExtendedSkewShape(outer, inner))
    return val ** st.boxes * (1 - val) ** st.a


def signed_union_value(p: EdreiThomaParams, outer, inner=EMPTY) -> Fraction:
    """``G_{λ//μ}`` on the union of ``φ̂_α`` and ``ε̂_β`` (``γ = 0``), via branching."""
    if p.gamma:
        raise ValueError("signed union values are exact only for γ = 0")
    gens = tuple(("phi_hat", a) for a in p.alphas) + tuple(("eps_hat", b) for b in p.betas)
    outer, inner = Partition(outer), Partition(inner)

    def rec(k, lam, mu):
        if k == len(gens):
            return Fraction(1) if lam == mu else Fraction(0)
        total = Fraction(0)
        for nu in partitions_between(mu, lam):
            first = signed_generator_skew(gens[k][0], gens[k][1], lam, nu)
            if first:
                total += first * rec(k + 1, nu, mu)
        return total

    if not outer.contains(inner):
        return Fraction(0)
    return rec(0, outer, inner)


def gcond_value(p: EdreiThomaParams) -> SpecValue:
    """``1 - e^{-γ} Π(1-α)/(1+β)``."""
    const: SpecValue = Fraction(1)
    for a in p.alphas:
        const *= 1 - a
    for b in p.betas:
        const /= 1 + b
    if p.gamma:
        const = exp_interval(-p.gamma) * const
    return 1 - const


def induced_from_signed(values: Sequence) -> list:
    """``h_n = (G_(n) - G_(n+1)) / (1 - G_(1))`` for ``n = 0..len(values)-2``."""
    vals = list(values)
    if len(vals) < 3:
        raise ValueError("need at least G_(0), G_(1), G_(2)")
    denom = 1 - vals[1]
    if upper(denom) <= 0 or (lower(denom) <= 0 <= upper(denom)):
        raise ValueError("G_(1) must be < 1")
    return [Fraction(1)] + [(vals[k] - vals[k + 1]) / denom for k in range(1, len(vals) - 1)]


# --- scans --------------------------------------------------------------------------

def positivity_scan(valuator: Callable[[Partition], SpecValue], max_size: int,
                    keys: Iterable[Partition] | None = None) -> list[tuple[Partition, SpecValue]]:
    """Partitions whose value lies strictly below zero."""
    keys = [k for k in partitions_upto(max_size) if k] if keys is None else list(keys)
    out = []
    for lam in keys:
        v = valuator(lam)
        if upper(v) < 0:
            out.append((lam, v))
    return out


def vanishing_propagation_check(valuator: Callable[[Partition], SpecValue], mu, max_size: int) -> bool:
    """If the value at ``μ`` is 0 then it is 0 at every ``λ ⊇ μ`` up to ``max_size``."""
    mu = Partition(mu)
    v = valuator(mu)
    if isinstance(v, Interval) or v != 0:
        return True
    return all(valuator(lam) == 0 for lam in partitions_upto(max_size) if lam.contains(mu))


def h_series_partial(hvals: Sequence, z) -> SpecValue:
    """``Σ_{n <= N} h_n z^n``."""
    total: SpecValue = Fraction(0)
    zz = Fraction(z)
    for n, h in enumerate(hvals):
        total = total + h * zz ** n
    return total


def schur_valuator(hvals: Sequence) -> Callable[[Partition], SpecValue]:
    return lambda lam: schur_value(hvals, lam)


def gamma_valuator(spec: GammaSpec) -> Callable[[Partition], SpecValue]:
    return lambda lam: gamma_value(spec, lam)
