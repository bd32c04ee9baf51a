"""Symmetric Grothendieck functions: the positive family G̃, the signed family G and the dual family g.

Elements of the completed ring are handled through two representations:
truncated polynomials (:class:`TruncatedSymPoly`) for identities that must be
checked in variables, and :class:`BasisVector` expansions for everything
stated in terms of a basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .basis import BasisVector
from .polyring import (
    CapError,
    TruncatedSymPoly,
    classical_basis,
    from_schur,
    h_to_poly,
    omega_schur,
    ring_det,
    schur_to_h,
    to_schur,
)
from .shapes import (
    EMPTY,
    ExtendedSkewShape,
    Partition,
    conjugate,
    extended_stats,
    inner_corners,
    partitions_between,
    partitions_upto,
    strip_classify,
)
from .tableaux import (
    count_delegant,
    count_elegant,
    count_strict_elegant,
    gbinom,
    rpp_content_counts,
    svt_content_counts,
)

FAMILIES = ("Gtilde", "Gsigned", "gdual")
DEFAULT_HARD_LIMIT = 16


@dataclass(frozen=True)
class GrothFamilyElement:
    """``G̃_{λ//μ}``, ``G_{λ//μ}`` or ``g_{λ/μ}``."""

    family: str
    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def shape(self) -> ExtendedSkewShape:
        return ExtendedSkewShape(self.outer, self.inner)


# --- realizations -----------------------------------------------------------------

@lru_cache(maxsize=4096)
def _realize_cached(family: str, outer: Partition, inner: Partition, nvars: int, degcap: int) -> TruncatedSymPoly:
    if family == "gdual":
        return TruncatedSymPoly(nvars, degcap, rpp_content_counts(outer, inner, nvars, degcap))
    shape = ExtendedSkewShape(outer, inner)
    pos = TruncatedSymPoly(nvars, degcap, svt_content_counts(shape, nvars, degcap))
    if family == "Gtilde":
        return pos
    return pos.sign_twist() * ((-1) ** (outer.size - inner.size))


def realize(elem: GrothFamilyElement, nvars: int, degcap: int) -> TruncatedSymPoly:
    """Truncated polynomial of a family element in ``nvars`` variables."""
    if nvars < 1 or degcap < 0:
        raise ValueError("need nvars >= 1 and degcap >= 0")
    return _realize_cached(elem.family, elem.outer, elem.inner, nvars, degcap)


def gtilde(outer, inner=EMPTY, nvars: int = 4, degcap: int = 4) -> TruncatedSymPoly:
    return realize(GrothFamilyElement("Gtilde", outer, inner), nvars, degcap)


def gsigned(outer, inner=EMPTY, nvars: int = 4, degcap: int = 4) -> TruncatedSymPoly:
    return realize(GrothFamilyElement("Gsigned", outer, inner), nvars, degcap)


def gdual(outer, inner=EMPTY, nvars: int = 4, degcap: int = 4) -> TruncatedSymPoly:
    return realize(GrothFamilyElement("gdual", outer, inner), nvars, degcap)


def single_var_value(outer, inner, x) -> Fraction:
    """``G̃_{λ//μ}(x)`` in one variable: ``(1+x)^a x^{|λ/μ|}`` on horizontal strips, else 0."""
    outer, inner = Partition(outer), Partition(inner)
    info = strip_classify(outer, inner)
    if not (info.contained and info.horizontal):
        return Fraction(0)
    st = extended_stats(ExtendedSkewShape(outer, inner))
    x = Fraction(x)
    return (1 + x) ** st.a * x ** st.boxes


# --- Schur transitions ------------------------------------------------------------

@lru_cache(maxsize=None)
def _r(mu: Partition, lam: Partition) -> int:
    return count_strict_elegant(mu, lam)


@lru_cache(maxsize=None)
def _f(mu: Partition, lam: Partition) -> int:
    return count_elegant(mu, lam)


def _first_row_supersets(lam: Partition, max_size: int) -> list[Partition]:
    """``μ ⊇ λ`` with ``μ_1 = λ_1`` and ``|μ| <= max_size`` (the only candidates for r and f)."""
    lam = Partition(lam)
    if not lam:
        return [EMPTY]
    return [mu for mu in partitions_upto(max_size) if mu and mu[0] == lam[0] and mu.contains(lam)]


@lru_cache(maxsize=None)
def _schur_expansion_gtilde(lam: Partition, dcap: int) -> BasisVector:
    return BasisVector("schur", {mu: _r(mu, lam) for mu in _first_row_supersets(lam, dcap)})


def schur_expansion_gtilde(lam, dcap: int) -> BasisVector:
    """Schur coefficients ``r_{μ/λ}`` of ``G̃_λ`` for ``|μ| <= dcap``."""
    lam = Partition(lam)
    if dcap < lam.size:
        raise ValueError("dcap must be at least |λ|")
    return _schur_expansion_gtilde(lam, dcap)


def schur_in_gtilde(lam, cap: int | None = None) -> BasisVector:
    """``s_λ = Σ (-1)^{|μ/λ|} f_{μ/λ} G̃_μ`` for ``|μ| <= cap``.

    The sum is infinite in general (for example ``f_{(1^k)/(1)} = 1`` for every
    ``k``), so a degree cap is required; it defaults to ``|λ| + 6``.
    """
    lam = Partition(lam)
    cap = lam.size + 6 if cap is None else cap
    return BasisVector(
        "gtilde",
        {mu: (-1) ** (mu.size - lam.size) * _f(mu, lam) for mu in _first_row_supersets(lam, cap)},
    )


def gtilde_to_schur(vec: BasisVector, dcap: int) -> BasisVector:
    if vec.basis != "gtilde":
        raise ValueError("expected a G̃ vector")
    out = BasisVector("schur")
    for lam, c in vec.items():
        if lam.size <= dcap:
            out = out + c * schur_expansion_gtilde(lam, dcap)
    return out


def schur_to_gtilde(vec: BasisVector, dcap: int) -> BasisVector:
    """Triangular elimination in canonical order, exact for all keys of size ``<= dcap``."""
    if vec.basis != "schur":
        raise ValueError("expected a Schur vector")
    rest = {k: v for k, v in vec.items() if k.size <= dcap}
    out: dict[Partition, Fraction] = {}
    while rest:
        lead = min(rest, key=lambda k: (k.size, tuple(-p for p in k)))
        c = rest.pop(lead)
        out[lead] = c
        for mu, r in schur_expansion_gtilde(lead, dcap).items():
            if mu == lead:
                continue
            v = rest.get(mu, Fraction(0)) - c * r
            if v:
                rest[mu] = v
            else:
                rest.pop(mu, None)
    return BasisVector("gtilde", out)


def poly_to_gtilde(p: TruncatedSymPoly) -> BasisVector:
    """G̃ expansion of a truncated polynomial (needs ``nvars >= degcap``)."""
    return schur_to_gtilde(to_schur(p), p.degcap)


def expand_with_caps(
    build: Callable[[int], TruncatedSymPoly],
    start_cap: int,
    hard_limit: int = DEFAULT_HARD_LIMIT,
) -> BasisVector:
    """Expand ``build(cap)`` (realized at ``v = D = cap``) in the G̃ basis, raising the cap
    until the top degree layer of the expansion vanishes."""
    cap = start_cap
    while True:
        vec = poly_to_gtilde(build(cap))
        if not any(lam.size == cap for lam in vec):
            return vec
        if cap >= hard_limit:
            raise CapError(f"G̃ expansion still has terms of degree {cap}", suggested_cap=cap + 2)
        cap = min(cap + 2, hard_limit)


# --- products ---------------------------------------------------------------------

def pieri(k: int, lam) -> BasisVector:
    """``G̃_(k) · G̃_λ = Σ C(r(μ/λ)-1, |μ/λ|-k) G̃_μ`` over horizontal strips ``μ/λ``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    lam = Partition(lam)
    ell = len(lam)
    out: dict[Partition, int] = {}

    def rec(i, acc):
        # row i (0-based) of μ ranges over [λ_i, λ_{i-1}] (no upper bound on the first row)
        if i == ell + 1:
            mu = Partition(acc)
            info = strip_classify(mu, lam)
            extra = mu.size - lam.size
            rows = sum(1 for a, b in zip(acc, list(lam) + [0]) if a > b)
            c = gbinom(rows - 1, extra - k)
            if info.horizontal and c:
                out[mu] = c
            return
        lo = lam.part(i + 1)
        hi = lam.part(i) if i else lam.part(1) + k + ell
        for v in range(lo, hi + 1):
            rec(i + 1, acc + [v])

    rec(0, [])
    return BasisVector("gtilde", out)


def structure_constants(mu, nu, start_cap: int | None = None, hard_limit: int = DEFAULT_HARD_LIMIT) -> BasisVector:
    """``c^λ_{μν}`` from ``G̃_μ · G̃_ν`` realized in enough variables and eliminated."""
    mu, nu = Partition(mu), Partition(nu)
    start = mu.size + nu.size + 4 if start_cap is None else start_cap

    def build(cap):
        return gtilde(mu, EMPTY, cap, cap) * gtilde(nu, EMPTY, cap, cap)

    return expand_with_caps(build, start, max(hard_limit, start))


def skew_expansion(lam, mu, start_cap: int | None = None, hard_limit: int = DEFAULT_HARD_LIMIT) -> BasisVector:
    """``G̃_{λ//μ} = Σ_ν d^λ_{μν} G̃_ν``."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    start = lam.size - mu.size + len(inner_corners(mu)) + 2 if start_cap is None else start_cap

    def build(cap):
        return gtilde(lam, mu, cap, cap)

    return expand_with_caps(build, start, max(hard_limit, start))


def tau(vec: BasisVector) -> BasisVector:
    """``G̃_λ -> G̃_{λ'}`` (also used on g-vectors)."""
    return vec.map_keys(conjugate)


# --- H_n and F_mu -----------------------------------------------------------------

def h_elements(n: int) -> BasisVector:
    """``H_0 = 1 + G̃_(1)``, ``H_n = G̃_(n) + G̃_(n+1)``, ``H_n = 0`` for ``n < 0``."""
    if n < 0:
        return BasisVector("gtilde")
    if n == 0:
        return BasisVector("gtilde", {EMPTY: 1, Partition([1]): 1})
    return BasisVector("gtilde", {Partition([n]): 1, Partition([n + 1]): 1})


def h_element_poly(n: int, nvars: int, degcap: int) -> TruncatedSymPoly:
    total = TruncatedSymPoly.zero(nvars, degcap)
    for lam, c in h_elements(n).items():
        total = total + gtilde(lam, EMPTY, nvars, degcap) * c
    return total


def _fmu_support_bound(mu: Partition) -> int:
    ell = len(mu)
    return mu.size + ell * (ell + 1) // 2


def f_mu_determinant(mu, start_cap: int | None = None, hard_limit: int = DEFAULT_HARD_LIMIT) -> BasisVector:
    """``F_μ = det[H_{μ_i - i + j}]`` computed in the polynomial ring, then eliminated."""
    mu = Partition(mu)
    ell = len(mu)
    if ell == 0:
        return BasisVector.unit("gtilde", EMPTY)
    start = _fmu_support_bound(mu) + 1 if start_cap is None else start_cap

    def build(cap):
        hs = {}

        def H(n):
            if n not in hs:
                hs[n] = h_element_poly(n, cap, cap)
            return hs[n]

        matrix = [[H(mu.part(i) - i + j) for j in range(1, ell + 1)] for i in range(1, ell + 1)]
        return ring_det(matrix, one=TruncatedSymPoly.one(cap, cap))

    return expand_with_caps(build, start, max(hard_limit, start))


def f_mu_delegant(mu) -> BasisVector:
    """``F_μ = Σ_ν d_{ν/μ} G̃_ν`` with delegant counts."""
    mu = Partition(mu)
    ell = len(mu)
    if ell == 0:
        return BasisVector.unit("gtilde", EMPTY)
    out: dict[Partition, int] = {}

    def rec(i, acc):
        if i == ell:
            nu = Partition(acc)
            d = count_delegant(nu, mu)
            if d:
                out[nu] = d
            return
        lo = mu[i]
        hi = max(mu[i], ell + 1 + mu[i] - (i + 1))
        if i:
            hi = min(hi, acc[-1])
        for v in range(lo, hi + 1):
            rec(i + 1, acc + [v])

    rec(0, [])
    return BasisVector("gtilde", out)


def f_mu(mu, start_cap: int | None = None) -> tuple[BasisVector, BasisVector, bool]:
    """Both expansions of ``F_μ`` and whether they agree."""
    a = f_mu_determinant(mu, start_cap)
    b = f_mu_delegant(mu)
    return a, b, a == b


# --- signed family ----------------------------------------------------------------

def signed_schur_expansion(lam, dcap: int) -> BasisVector:
    """``G_λ = Σ (-1)^{|μ/λ|} r_{μ/λ} s_μ`` (sign twist of the G̃ expansion)."""
    lam = Partition(lam)
    vec = schur_expansion_gtilde(lam, dcap)
    return BasisVector("schur", {mu: (-1) ** (mu.size - lam.size) * c for mu, c in vec.items()})


def substitute_one(p: TruncatedSymPoly, max_power: int) -> TruncatedSymPoly:
    """Set one variable of ``p`` to 1, given that it appears with exponent ``<= max_power``.

    The result lives in ``nvars - 1`` variables with degree cap ``degcap - max_power``.
    """
    nv, cap = p.nvars - 1, p.degcap - max_power
    if nv < 0 or cap < 0:
        raise ValueError("not enough variables or degree headroom to substitute")
    out: dict[Partition, Fraction] = {}
    for beta in partitions_upto(cap, max_length=nv):
        total = Fraction(0)
        for k in range(max_power + 1):
            total += p.monomial_coefficient(tuple(beta) + (k,))
        if total:
            out[beta] = total
    return TruncatedSymPoly(nv, cap, out)


def first_row_removal_check(lam, mu, nvars: int, degcap: int) -> bool:
    """``G_{λ//μ}(1, x) = G_{λ̃//μ}(x)`` where ``λ̃`` drops the first row of ``λ``."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    lam_t = Partition(lam[1:])
    # a variable appears at most once per column
    k = lam.part(1)
    lhs = substitute_one(gsigned(lam, mu, nvars + 1, degcap + k), k)
    if lam_t.contains(mu):
        rhs = gsigned(lam_t, mu, nvars, degcap)
    else:
        rhs = TruncatedSymPoly.zero(nvars, degcap)
    return lhs == rhs


# --- involutions and duality ------------------------------------------------------

def omega(vec: BasisVector) -> BasisVector:
    return omega_schur(vec)


def substitute_x_over_one_minus_x(p: TruncatedSymPoly) -> TruncatedSymPoly:
    """``p(x_1/(1-x_1), x_2/(1-x_2), ...)`` truncated at the same degree."""
    out: dict[Partition, Fraction] = {}
    for alpha in partitions_upto(p.degcap, max_length=p.nvars):
        total = Fraction(0)

        def rec(i, beta, weight):
            nonlocal total
            if i == len(alpha):
                total += weight * p.monomial_coefficient(beta)
                return
            for b in range(1, alpha[i] + 1):
                # [x^a] (x/(1-x))^b = C(a-1, b-1)
                rec(i + 1, beta + (b,), weight * gbinom(alpha[i] - 1, b - 1))

        rec(0, (), 1)
        if total:
            out[alpha] = total
    return TruncatedSymPoly(p.nvars, p.degcap, out)


def omega_identity_check(lam, nvars: int, degcap: int) -> bool:
    """``ω(G̃_λ) = G̃_{λ'}(x/(1-x))`` coefficientwise up to ``degcap``."""
    if nvars < degcap:
        raise CapError("omega check needs nvars >= degcap", suggested_cap=degcap)
    lam = Partition(lam)
    lhs = from_schur(omega_schur(to_schur(gtilde(lam, EMPTY, nvars, degcap))), nvars, degcap)
    rhs = substitute_x_over_one_minus_x(gtilde(conjugate(lam), EMPTY, nvars, degcap))
    return lhs == rhs


def tauhat_h_image(n: int, nvars: int, degcap: int) -> TruncatedSymPoly:
    """``τ̂(h_n) = Σ_i C(n-1, i-1) e_i``."""
    if n == 0:
        return TruncatedSymPoly.one(nvars, degcap)
    total = TruncatedSymPoly.zero(nvars, degcap)
    for i in range(1, n + 1):
        total = total + classical_basis("e", i, nvars, degcap) * gbinom(n - 1, i - 1)
    return total


def tauhat(p: TruncatedSymPoly) -> TruncatedSymPoly:
    hvec = schur_to_h(to_schur(p))
    return h_to_poly(hvec, lambda n: tauhat_h_image(n, p.nvars, p.degcap), p.nvars, p.degcap)


def tauhat_check(lam, mu, nvars: int, degcap: int) -> bool:
    """``τ̂(g_{λ/μ}) = g_{λ'/μ'}``."""
    lam, mu = Partition(lam), Partition(mu)
    if nvars < degcap or degcap < lam.size:
        raise CapError("tauhat check needs nvars >= degcap >= |λ|", suggested_cap=max(degcap, lam.size))
    return tauhat(gdual(lam, mu, nvars, degcap)) == gdual(conjugate(lam), conjugate(mu), nvars, degcap)


def duality_matrices(dcap: int) -> tuple[list[Partition], dict, dict]:
    """Schur coefficients of ``G_λ`` and ``g_λ`` for ``|λ| <= dcap``, computed from realizations."""
    keys = partitions_upto(dcap)
    v = max(dcap, 1)
    mg = {lam: to_schur(gsigned(lam, EMPTY, v, dcap)) for lam in keys}
    md = {lam: to_schur(gdual(lam, EMPTY, v, dcap)) for lam in keys}
    return keys, mg, md


def duality_check(dcap: int) -> bool:
    """``M_G · M_gᵀ = I`` on the block ``|λ|, |κ| <= dcap``."""
    keys, mg, md = duality_matrices(dcap)
    for lam in keys:
        for kappa in keys:
            pairing = sum((mg[lam][mu] * c for mu, c in md[kappa].items()), Fraction(0))
            if pairing != (1 if lam == kappa else 0):
                return False
    return True


def hall_pairing_G_g(lam, kappa, dcap: int | None = None) -> Fraction:
    lam, kappa = Partition(lam), Partition(kappa)
    d = dcap if dcap is not None else max(lam.size, kappa.size)
    v = max(d, 1)
    a = to_schur(gsigned(lam, EMPTY, v, d))
    b = to_schur(gdual(kappa, EMPTY, v, d))
    return sum((a[mu] * c for mu, c in b.items()), Fraction(0))


# --- branching --------------------------------------------------------------------

def _expanded_product(p: TruncatedSymPoly, q: TruncatedSymPoly, degcap: int) -> dict[tuple, Fraction]:
    """``p(x) q(y)`` as an explicit polynomial in the concatenated variables."""
    out: dict[tuple, Fraction] = {}
    qe = q.expand()
    for a, ca in p.expand().items():
        da = sum(a)
        for b, cb in qe.items():
            if da + sum(b) <= degcap:
                out[a + b] = out.get(a + b, Fraction(0)) + ca * cb
    return {k: v for k, v in out.items() if v}


def branching_check(family: str, lam, mu, split: tuple[int, int] = (2, 2), degcap: int = 5) -> bool:
    """Split-variable identity ``F_{λ?μ}(x, y) = Σ_ν F_{λ?ν}(x) F_{ν?μ}(y)`` for ``Gtilde`` or ``gdual``."""
    if family not in ("Gtilde", "gdual"):
        raise ValueError("branching is checked for Gtilde and gdual")
    lam, mu = Partition(lam), Partition(mu)
    vx, vy = split
    lhs = realize(GrothFamilyElement(family, lam, mu), vx + vy, degcap).expand()
    lhs = {k: v for k, v in lhs.items()}
    rhs: dict[tuple, Fraction] = {}
    for nu in partitions_between(mu, lam):
        px = realize(GrothFamilyElement(family, lam, nu), vx, degcap)
        py = realize(GrothFamilyElement(family, nu, mu), vy, degcap)
        for k, v in _expanded_product(px, py, degcap).items():
            rhs[k] = rhs.get(k, Fraction(0)) + v
    rhs = {k: v for k, v in rhs.items() if v}
    return lhs == rhs


def h0_generating_check(nvars: int, degcap: int, zcap: int) -> bool:
    """Coefficients of ``z^k`` in ``1 + (z+1) Σ_n G̃_(n) z^{n-1}`` equal those of ``Π(1+x_i)/(1-z x_i)``,
    that is ``H_k = (1 + G̃_(1)) h_k``."""
    one_plus = TruncatedSymPoly.one(nvars, degcap) + gtilde((1,), EMPTY, nvars, degcap)
    for k in range(zcap + 1):
        lhs = h_element_poly(k, nvars, degcap)
        rhs = one_plus * classical_basis("h", k, nvars, degcap)
        if lhs != rhs:
            return False
    return True


@lru_cache(maxsize=None)
def _gdual_schur(lam: Partition) -> BasisVector:
    d = max(lam.size, 1)
    return to_schur(gdual(lam, EMPTY, d, d))


def gdual_to_schur(vec: BasisVector) -> BasisVector:
    if vec.basis != "gdual":
        raise ValueError("expected a g vector")
    out = BasisVector("schur")
    for lam, c in vec.items():
        out = out + c * _gdual_schur(lam)
    return out


def schur_to_gdual(vec: BasisVector) -> BasisVector:
    """Inverse of :func:`gdual_to_schur`; ``g_λ = s_λ + (lower degree)`` so eliminate from the top."""
    if vec.basis != "schur":
        raise ValueError("expected a Schur vector")
    rest = dict(vec.items())
    out: dict[Partition, Fraction] = {}
    while rest:
        lead = max(rest, key=lambda k: (k.size, tuple(p for p in k)))
        c = rest.pop(lead)
        out[lead] = c
        for mu, v in _gdual_schur(lead).items():
            if mu == lead:
                continue
            nv = rest.get(mu, Fraction(0)) - c * v
            if nv:
                rest[mu] = nv
            else:
                rest.pop(mu, None)
    return BasisVector("gdual", out)
