"""Exact truncated symmetric polynomials, classical bases, and one-variable power series.

A :class:`TruncatedSymPoly` lives in ``v`` variables and keeps every term of
total degree at most ``D``; coefficients are stored against the
monomial-symmetric basis ``m_lam``.  Whenever two symmetric functions must be
told apart up to degree ``D`` use ``v >= D`` variables (then monomial keys are
in bijection with partitions of size ``<= D``).
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Mapping, Sequence

from .basis import BasisVector
from .intervals import Interval
from .shapes import EMPTY, Partition, partition_key, partitions, partitions_upto
from .tableaux import kostka


class CapError(ValueError):
    """A computation needs more variables or a higher degree cap."""

    def __init__(self, message: str, suggested_cap: int | None = None):
        super().__init__(message)
        self.suggested_cap = suggested_cap


# --- monomial products --------------------------------------------------------------

def _distinct_permutations(values: Sequence[int]):
    counts = Counter(values)
    keys = sorted(counts)
    n = len(values)
    out = [0] * n

    def rec(pos):
        if pos == n:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out[pos] = k
                yield from rec(pos + 1)
                counts[k] += 1

    yield from rec(0)


def _orbit_size(vec: Sequence[int]) -> int:
    size = factorial(len(vec))
    for m in Counter(vec).values():
        size //= factorial(m)
    return size


@lru_cache(maxsize=None)
def monomial_product(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """Structure constants of ``m_lam * m_mu`` in infinitely many variables."""
    if len(lam) < len(mu):
        lam, mu = mu, lam
    width = len(lam) + len(mu)
    base = tuple(lam) + (0,) * len(mu)
    hits: Counter = Counter()
    for b in _distinct_permutations(tuple(mu) + (0,) * len(lam)):
        hits[tuple(sorted((x + y for x, y in zip(base, b)), reverse=True))] += 1
    lam_orbit = _orbit_size(base)
    out = []
    for vec, k in hits.items():
        c, rem = divmod(lam_orbit * k, _orbit_size(vec))
        assert rem == 0
        out.append((Partition(vec), c))
    return tuple(sorted(out, key=lambda t: partition_key(t[0])))


# --- truncated symmetric polynomials ---------------------------------------------

class TruncatedSymPoly:
    """Symmetric polynomial in ``nvars`` variables truncated above total degree ``degcap``."""

    __slots__ = ("nvars", "degcap", "coeffs")

    def __init__(self, nvars: int, degcap: int, coeffs: Mapping | None = None):
        if nvars < 0 or degcap < 0:
            raise ValueError("nvars and degcap must be nonnegative")
        self.nvars = nvars
        self.degcap = degcap
        data: dict[Partition, Fraction] = {}
        for lam, c in (coeffs or {}).items():
            lam = Partition(lam)
            if len(lam) > nvars or lam.size > degcap:
                continue
            c = Fraction(c)
            if c:
                data[lam] = data.get(lam, Fraction(0)) + c
        self.coeffs = {k: v for k, v in data.items() if v != 0}

    @classmethod
    def one(cls, nvars: int, degcap: int) -> "TruncatedSymPoly":
        return cls(nvars, degcap, {EMPTY: 1})

    @classmethod
    def zero(cls, nvars: int, degcap: int) -> "TruncatedSymPoly":
        return cls(nvars, degcap)

    def __getitem__(self, lam) -> Fraction:
        return self.coeffs.get(Partition(lam), Fraction(0))

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: partition_key(kv[0]))

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other: "TruncatedSymPoly"):
        if not isinstance(other, TruncatedSymPoly):
            raise TypeError(f"expected TruncatedSymPoly, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise ValueError(f"mismatched nvars: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSymPoly(self.nvars, self.degcap, {EMPTY: other})
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return TruncatedSymPoly(self.nvars, min(self.degcap, other.degcap), out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSymPoly(self.nvars, self.degcap, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return TruncatedSymPoly(self.nvars, self.degcap, {k: c * v for k, v in self.coeffs.items()})
        self._check(other)
        cap = min(self.degcap, other.degcap)
        out: dict[Partition, Fraction] = {}
        for lam, a in self.coeffs.items():
            for mu, b in other.coeffs.items():
                if lam.size + mu.size > cap:
                    continue
                ab = a * b
                for nu, c in monomial_product(lam, mu):
                    if len(nu) <= self.nvars:
                        out[nu] = out.get(nu, Fraction(0)) + ab * c
        return TruncatedSymPoly(self.nvars, cap, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = TruncatedSymPoly.one(self.nvars, self.degcap)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncatedSymPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.degcap == other.degcap and self.coeffs == other.coeffs

    def truncate(self, degcap: int) -> "TruncatedSymPoly":
        return TruncatedSymPoly(self.nvars, min(degcap, self.degcap), self.coeffs)

    def homogeneous(self, d: int) -> "TruncatedSymPoly":
        return TruncatedSymPoly(self.nvars, self.degcap, {k: v for k, v in self.coeffs.items() if k.size == d})

    def sign_twist(self) -> "TruncatedSymPoly":
        """``p(x) -> p(-x)``."""
        return TruncatedSymPoly(self.nvars, self.degcap, {k: (-1) ** k.size * v for k, v in self.coeffs.items()})

    def monomial_coefficient(self, exponents: Sequence[int]) -> Fraction:
        """Coefficient of ``x^exponents`` (any exponent order)."""
        if len(exponents) > self.nvars and any(exponents[self.nvars:]):
            return Fraction(0)
        return self[Partition(sorted((e for e in exponents if e), reverse=True))]

    def expand(self) -> dict[tuple[int, ...], Fraction]:
        """Explicit polynomial: exponent vector (length ``nvars``) -> coefficient."""
        out = {}
        for lam, c in self.coeffs.items():
            for vec in _distinct_permutations(tuple(lam) + (0,) * (self.nvars - len(lam))):
                out[vec] = c
        return out

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact value at a point with ``len(point) == nvars`` (only meaningful when untruncated)."""
        if len(point) != self.nvars:
            raise ValueError("point must have nvars coordinates")
        total = Fraction(0)
        for vec, c in self.expand().items():
            term = c
            for x, e in zip(point, vec):
                if e:
                    term *= Fraction(x) ** e
            total += term
        return total

    def __repr__(self):
        body = " + ".join(f"{v}*m[{','.join(map(str, k)) or '-'}]" for k, v in self.items())
        return f"TruncatedSymPoly(v={self.nvars}, D={self.degcap}: {body or '0'})"


# --- classical bases ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _schur_monomials(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    return tuple((nu, kostka(lam, nu)) for nu in partitions(lam.size) if kostka(lam, nu))


def classical_basis(kind: str, index, nvars: int, degcap: int) -> TruncatedSymPoly:
    """``h_n``, ``e_n``, ``p_n`` (integer index) or ``s_lam`` (partition index)."""
    if kind == "s":
        lam = Partition(index)
        return TruncatedSymPoly(nvars, degcap, dict(_schur_monomials(lam)))
    n = int(index)
    if n < 0:
        return TruncatedSymPoly.zero(nvars, degcap)
    if n == 0:
        return TruncatedSymPoly.one(nvars, degcap)
    if kind == "h":
        return TruncatedSymPoly(nvars, degcap, {nu: 1 for nu in partitions(n, max_length=nvars)})
    if kind == "e":
        return TruncatedSymPoly(nvars, degcap, {Partition([1] * n): 1})
    if kind == "p":
        return TruncatedSymPoly(nvars, degcap, {Partition([n]): 1})
    raise ValueError(f"unknown classical basis {kind!r}")


def to_schur(p: TruncatedSymPoly) -> BasisVector:
    """Schur expansion by peeling off lex-leading monomials degree by degree."""
    if p.nvars < p.degcap:
        raise CapError(f"to_schur needs nvars >= degcap (got {p.nvars} < {p.degcap})", suggested_cap=p.nvars)
    rest = dict(p.coeffs)
    out: dict[Partition, Fraction] = {}
    while rest:
        lead = min(rest, key=partition_key)
        c = rest[lead]
        out[lead] = c
        for nu, k in _schur_monomials(lead):
            v = rest.get(nu, Fraction(0)) - c * k
            if v:
                rest[nu] = v
            else:
                rest.pop(nu, None)
    return BasisVector("schur", out)


def from_schur(vec: BasisVector, nvars: int, degcap: int) -> TruncatedSymPoly:
    if vec.basis != "schur":
        raise ValueError("expected a Schur vector")
    out: dict[Partition, Fraction] = {}
    for lam, c in vec.items():
        if lam.size > degcap:
            continue
        for nu, k in _schur_monomials(lam):
            if len(nu) <= nvars:
                out[nu] = out.get(nu, Fraction(0)) + c * k
    return TruncatedSymPoly(nvars, degcap, out)


def omega_schur(vec: BasisVector) -> BasisVector:
    """``s_lam -> s_lam'`` termwise."""
    if vec.basis != "schur":
        raise ValueError("omega acts on Schur vectors")
    return vec.map_keys(lambda lam: lam.conjugate())


# --- determinants over arbitrary commutative rings ---------------------------------

def ring_det(matrix: Sequence[Sequence], one=1):
    """Determinant by Laplace expansion along the first row, memoised on column sets.

    Works for any commutative ring elements supporting ``+``, ``-`` and ``*``.
    """
    n = len(matrix)
    if n == 0:
        return one
    memo: dict[tuple[int, frozenset], object] = {}

    def minor(row: int, cols: tuple[int, ...]):
        if row == n:
            return one
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = None
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if _is_zero(entry):
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if _is_zero(sub):
                continue
            term = entry * sub
            if pos % 2:
                term = -term
            total = term if total is None else total + term
        if total is None:
            total = one * 0
        memo[key] = total
        return total

    return minor(0, tuple(range(n)))


def _is_zero(x) -> bool:
    if isinstance(x, (TruncatedSymPoly, BasisVector)):
        return not x
    if isinstance(x, Interval):
        return x.lo == x.hi == 0
    return x == 0


def jacobi_trudi_matrix(lam: Partition, h: Callable[[int], object]) -> list[list]:
    lam = Partition(lam)
    ell = len(lam)
    return [[h(lam.part(i) - i + j) for j in range(1, ell + 1)] for i in range(1, ell + 1)]


def jacobi_trudi(lam: Partition, hvals_or_ring):
    """``det[h_{lam_i - i + j}]``.

    ``hvals_or_ring`` is either a sequence of numeric values ``h_0, h_1, ...``
    (``h_0`` is taken as 1 regardless) or a pair ``(nvars, degcap)`` selecting
    the symbolic ring of truncated symmetric polynomials.
    """
    lam = Partition(lam)
    if isinstance(hvals_or_ring, tuple) and len(hvals_or_ring) == 2 and all(isinstance(t, int) for t in hvals_or_ring):
        v, d = hvals_or_ring
        cache: dict[int, TruncatedSymPoly] = {}

        def h(n):
            if n not in cache:
                cache[n] = classical_basis("h", n, v, d)
            return cache[n]

        return ring_det(jacobi_trudi_matrix(lam, h), one=TruncatedSymPoly.one(v, d))
    hvals = list(hvals_or_ring)

    def hn(n):
        if n < 0:
            return Fraction(0)
        if n == 0:
            return Fraction(1)
        if n >= len(hvals):
            raise IndexError(f"h-values cover indices < {len(hvals)}, need h_{n}")
        return hvals[n]

    if lam and lam[0] + len(lam) - 1 >= len(hvals):
        raise IndexError(f"h-values cover indices < {len(hvals)}, need h_{lam[0] + len(lam) - 1}")
    return ring_det(jacobi_trudi_matrix(lam, hn), one=Fraction(1))


# --- polynomials in the h generators ----------------------------------------------

def h_product(vec_a: BasisVector, vec_b: BasisVector, max_size: int | None = None) -> BasisVector:
    """Product in the h basis: ``h_lam * h_mu = h_{lam ∪ mu}``."""
    out: dict[Partition, Fraction] = {}
    for a, ca in vec_a.items():
        for b, cb in vec_b.items():
            if max_size is not None and a.size + b.size > max_size:
                continue
            key = Partition(sorted(tuple(a) + tuple(b), reverse=True))
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return BasisVector("h", out)


class _HRing:
    """Thin wrapper so :func:`ring_det` can work with h-basis vectors."""

    __slots__ = ("vec", "cap")

    def __init__(self, vec: BasisVector, cap: int | None):
        self.vec, self.cap = vec, cap

    def __mul__(self, other):
        return _HRing(h_product(self.vec, other.vec, self.cap), self.cap)

    def __add__(self, other):
        return _HRing(self.vec + other.vec, self.cap)

    def __neg__(self):
        return _HRing(-self.vec, self.cap)

    def __sub__(self, other):
        return self + (-other)

    def __bool__(self):
        return bool(self.vec)


def schur_to_h(vec: BasisVector) -> BasisVector:
    """Rewrite a Schur vector in the h basis via Jacobi-Trudi."""
    if vec.basis != "schur":
        raise ValueError("expected a Schur vector")
    total = BasisVector("h")
    for lam, c in vec.items():
        def h(n):
            if n < 0:
                return _HRing(BasisVector("h"), None)
            return _HRing(BasisVector.unit("h", [n] if n else []), None)

        det = ring_det(jacobi_trudi_matrix(lam, h), one=_HRing(BasisVector.unit("h", EMPTY), None))
        total = total + c * det.vec
    return total


def h_to_poly(vec: BasisVector, gens: Callable[[int], TruncatedSymPoly], nvars: int, degcap: int) -> TruncatedSymPoly:
    """Evaluate an h-basis vector after substituting ``h_n -> gens(n)``."""
    total = TruncatedSymPoly.zero(nvars, degcap)
    cache: dict[int, TruncatedSymPoly] = {}
    for lam, c in vec.items():
        term = TruncatedSymPoly.one(nvars, degcap)
        for part in lam:
            if part not in cache:
                cache[part] = gens(part)
            term = term * cache[part]
        total = total + term * c
    return total


# --- power series -----------------------------------------------------------------

class PowerSeries:
    """Truncated power series ``c_0 + c_1 z + ... + c_cap z^cap`` with rational or interval coefficients."""

    __slots__ = ("cap", "coeffs")

    def __init__(self, coeffs: Iterable, cap: int | None = None):
        coeffs = [c if isinstance(c, Interval) else Fraction(c) for c in coeffs]
        if cap is None:
            cap = len(coeffs) - 1
        coeffs = coeffs[: cap + 1] + [Fraction(0)] * (cap + 1 - len(coeffs))
        self.cap = cap
        self.coeffs = coeffs

    @classmethod
    def one(cls, cap: int) -> "PowerSeries":
        return cls([1], cap)

    @classmethod
    def geometric(cls, a, cap: int) -> "PowerSeries":
        """``1/(1 - a z)``."""
        out, t = [], Fraction(1)
        for _ in range(cap + 1):
            out.append(t)
            t = t * a
        return cls(out, cap)

    @classmethod
    def exp_linear(cls, g, cap: int) -> "PowerSeries":
        """``e^{g z}``."""
        out, t = [], Fraction(1)
        for n in range(cap + 1):
            out.append(t)
            t = t * g / (n + 1)
        return cls(out, cap)

    @classmethod
    def z_over_one_minus_z(cls, cap: int) -> "PowerSeries":
        return cls([0] + [1] * cap, cap)

    def __getitem__(self, n: int):
        return self.coeffs[n] if 0 <= n <= self.cap else Fraction(0)

    def coefficient(self, n: int):
        return self[n]

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries([other], self.cap)

    def __add__(self, other):
        other = self._coerce(other)
        cap = min(self.cap, other.cap)
        return PowerSeries([self[n] + other[n] for n in range(cap + 1)], cap)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.cap)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([c * other for c in self.coeffs], self.cap)
        cap = min(self.cap, other.cap)
        out = []
        for n in range(cap + 1):
            acc = Fraction(0)
            for k in range(n + 1):
                acc = acc + self[k] * other[n - k]
            out.append(acc)
        return PowerSeries(out, cap)

    __rmul__ = __mul__

    def reciprocal(self) -> "PowerSeries":
        c0 = self[0]
        if (isinstance(c0, Interval) and c0.lo <= 0 <= c0.hi) or (not isinstance(c0, Interval) and c0 == 0):
            raise ZeroDivisionError("reciprocal of a series with zero constant term")
        inv0 = 1 / c0
        out = [inv0]
        for n in range(1, self.cap + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                acc = acc + self[k] * out[n - k]
            out.append(-acc * inv0)
        return PowerSeries(out, self.cap)

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * other.reciprocal()
        return PowerSeries([c / other for c in self.coeffs], self.cap)

    def exp(self) -> "PowerSeries":
        """``exp`` of a series with zero constant term."""
        if self[0] != 0:
            raise ValueError("exp needs a zero constant term")
        out = [Fraction(1)]
        for n in range(1, self.cap + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                acc = acc + k * self[k] * out[n - k]
            out.append(acc / n)
        return PowerSeries(out, self.cap)

    def log(self) -> "PowerSeries":
        """``log`` of a series with constant term 1."""
        if self[0] != 1:
            raise ValueError("log needs constant term 1")
        out = [Fraction(0)]
        for n in range(1, self.cap + 1):
            acc = Fraction(0)
            for k in range(1, n):
                acc = acc + k * out[k] * self[n - k]
            out.append(self[n] - acc / n)
        return PowerSeries(out, self.cap)

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """``self(inner(z))`` for ``inner`` with zero constant term (Horner)."""
        if inner[0] != 0:
            raise ValueError("inner series must have zero constant term")
        cap = min(self.cap, inner.cap)
        out = PowerSeries([self[cap]], cap)
        for n in range(cap - 1, -1, -1):
            out = out * inner + PowerSeries([self[n]], cap)
        return out

    def compose_with_z_over_1_minus_z(self) -> "PowerSeries":
        return self.compose(PowerSeries.z_over_one_minus_z(self.cap))

    def evaluate_partial(self, z, upto: int | None = None):
        upto = self.cap if upto is None else upto
        total = Fraction(0)
        for n in range(upto + 1):
            total = total + self[n] * Fraction(z) ** n
        return total

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.cap == other.cap and self.coeffs == other.coeffs

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coeffs]})"


def newton_convert(values: Sequence, n: int, source: str = "h") -> list:
    """Convert ``h_1..h_N`` to ``p_1..p_N`` (``source='h'``) or back (``source='p'``).

    ``values[k-1]`` is the value at index ``k``.  Uses
    ``H(z) = exp(sum p_k z^k / k)``.
    """
    if n < 1:
        raise ValueError("N must be at least 1")
    vals = list(values)[:n]
    vals += [Fraction(0)] * (n - len(vals))
    if source == "h":
        logh = PowerSeries([1] + vals, n).log()
        return [k * logh[k] for k in range(1, n + 1)]
    if source == "p":
        ser = PowerSeries([0] + [Fraction(vals[k - 1]) / k for k in range(1, n + 1)], n)
        return [ser.exp()[k] for k in range(1, n + 1)]
    raise ValueError("source must be 'h' or 'p'")


def degree_layers(p: TruncatedSymPoly) -> dict[int, list[Partition]]:
    out: dict[int, list[Partition]] = {}
    for lam in p.coeffs:
        out.setdefault(lam.size, []).append(lam)
    return out


def all_monomial_keys(nvars: int, degcap: int) -> list[Partition]:
    return partitions_upto(degcap, max_length=nvars)

