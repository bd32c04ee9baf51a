from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grothpos.basis import BasisVector
from grothpos.polyring import (
    CapError,
    PowerSeries,
    TruncatedSymPoly,
    classical_basis,
    from_schur,
    jacobi_trudi,
    newton_convert,
    to_schur,
)
from grothpos.shapes import EMPTY, Partition, partitions_upto
from grothpos.special import EdreiThomaParams, lambda_e_series, lambda_series, union_specs

from strategies import rationals

F = Fraction


def m(nvars, degcap, **kw):
    return TruncatedSymPoly(nvars, degcap, kw)


def test_product_examples():
    x = TruncatedSymPoly(2, 2, {(1,): 1})
    assert x * x == TruncatedSymPoly(2, 2, {(2,): 1, (1, 1): 2})
    one = TruncatedSymPoly.one(2, 2)
    assert x * one == x
    h1 = classical_basis("h", 1, 3, 2)
    h2 = classical_basis("h", 2, 3, 2)
    assert h1 * h1 - h2 == classical_basis("e", 2, 3, 2)


def test_mismatched_nvars_rejected():
    with pytest.raises(ValueError):
        TruncatedSymPoly.one(2, 2) + TruncatedSymPoly.one(3, 2)


def test_classical_basis_examples():
    assert classical_basis("h", 2, 2, 2) == TruncatedSymPoly(2, 2, {(2,): 1, (1, 1): 1})
    assert classical_basis("e", 2, 2, 2) == TruncatedSymPoly(2, 2, {(1, 1): 1})
    assert classical_basis("s", (2, 1), 3, 3) == TruncatedSymPoly(3, 3, {(2, 1): 1, (1, 1, 1): 2})


def test_to_schur_examples():
    assert to_schur(classical_basis("s", (2, 1), 3, 3)) == BasisVector.unit("schur", (2, 1))
    assert to_schur(classical_basis("h", 2, 3, 3)) == BasisVector.unit("schur", (2,))
    h1 = classical_basis("h", 1, 3, 3)
    assert to_schur(h1 * h1) == BasisVector("schur", {(2,): 1, (1, 1): 1})


def test_to_schur_needs_enough_variables():
    with pytest.raises(CapError):
        to_schur(classical_basis("h", 2, 2, 3))


def test_schur_round_trip():
    for lam in partitions_upto(5):
        for other in partitions_upto(5):
            vec = BasisVector("schur", {lam: 2, other: F(-1, 3)})
            assert to_schur(from_schur(vec, 5, 5)) == vec


def test_jacobi_trudi_examples():
    e2 = jacobi_trudi(Partition((1, 1)), (3, 2))
    assert e2 == classical_basis("e", 2, 3, 2)
    half = [F(1, 2) ** n for n in range(4)]
    assert jacobi_trudi(Partition((2,)), half) == F(1, 4)
    beta = [F(1)] + [F(1, 2)] * 3
    assert jacobi_trudi(Partition((1, 1)), beta) == F(-1, 4)


def test_jacobi_trudi_short_sequence():
    with pytest.raises(IndexError):
        jacobi_trudi(Partition((3,)), [1, 1])


def test_jacobi_trudi_matches_schur_basis():
    for lam in partitions_upto(5):
        assert jacobi_trudi(lam, (6, 5)) == classical_basis("s", lam, 6, 5)


def test_series_examples():
    assert PowerSeries([1, F(-1, 2)], 4).reciprocal().coeffs == [F(1, 2 ** n) for n in range(5)]
    assert PowerSeries([0, 1], 3).exp().coeffs == [1, 1, F(1, 2), F(1, 6)]
    assert PowerSeries.z_over_one_minus_z(3).exp().coeffs == [1, 1, F(3, 2), F(13, 6)]


def test_reciprocal_requires_constant_term():
    with pytest.raises(ZeroDivisionError):
        PowerSeries([0, 1], 3).reciprocal()


def test_newton_examples():
    assert newton_convert([1, 0, 0, 0], 4, source="p") == [F(1, factorial(n)) for n in range(1, 5)]
    third = [F(1, 3) ** k for k in range(1, 5)]
    assert newton_convert(third, 4) == third
    assert newton_convert([F(1, 2), 0, 0, 0], 4) == [(-1) ** (k - 1) * F(1, 2) ** k for k in range(1, 5)]


@given(st.lists(rationals(), min_size=1, max_size=6))
def test_newton_round_trip(vals):
    n = len(vals)
    assert newton_convert(newton_convert(vals, n), n, source="p") == vals


def _params():
    return st.builds(
        EdreiThomaParams,
        st.lists(rationals(), max_size=3).map(tuple),
        st.lists(rationals(), max_size=3).map(tuple),
        rationals(3, 2),
    )


@given(_params())
def test_e_series_is_reciprocal_of_h_at_minus_z(p):
    h = lambda_series(p, 8)
    h_neg = PowerSeries([(-1) ** n * c for n, c in enumerate(h.coeffs)], 8)
    assert lambda_e_series(p, 8) == h_neg.reciprocal()


@given(_params(), _params())
def test_union_is_series_product(p, q):
    union = EdreiThomaParams(p.alphas + q.alphas, p.betas + q.betas, p.gamma + q.gamma)
    product = union_specs([lambda_series(p, 8).coeffs, lambda_series(q, 8).coeffs])
    assert list(product) == lambda_series(union, 8).coeffs


@given(st.sampled_from(partitions_upto(3)), st.sampled_from(partitions_upto(3)))
def test_product_commutes(a, b):
    pa = TruncatedSymPoly(4, 5, {a: 1, EMPTY: 2})
    pb = TruncatedSymPoly(4, 5, {b: F(1, 3)})
    assert pa * pb == pb * pa


def test_evaluate_matches_expand():
    p = classical_basis("s", (2, 1), 3, 3)
    point = (F(1, 2), 2, 3)
    direct = sum(c * point[0] ** e[0] * point[1] ** e[1] * point[2] ** e[2] for e, c in p.expand().items())
    assert p.evaluate(point) == direct
