from fractions import Fraction

import pytest

from grothpos import groth
from grothpos.basis import BasisVector
from grothpos.groth import (
    GrothFamilyElement,
    branching_check,
    duality_check,
    duality_matrices,
    f_mu,
    first_row_removal_check,
    gdual,
    gsigned,
    gtilde,
    h0_generating_check,
    h_element_poly,
    h_elements,
    hall_pairing_G_g,
    omega,
    omega_identity_check,
    pieri,
    schur_expansion_gtilde,
    schur_in_gtilde,
    single_var_value,
    skew_expansion,
    structure_constants,
    tau,
    tauhat_check,
)
from grothpos.polyring import TruncatedSymPoly, classical_basis, to_schur
from grothpos.shapes import EMPTY, Partition, conjugate, partitions_upto
from grothpos.tableaux import count_elegant, count_strict_elegant

F = Fraction


def gt(d):
    return BasisVector("gtilde", d)


def test_realize_examples():
    assert gtilde((1,), nvars=2, degcap=2) == TruncatedSymPoly(2, 2, {(1,): 1, (1, 1): 1})
    assert not gtilde((1, 1), nvars=1, degcap=4)
    assert gdual((2, 1), nvars=1, degcap=3) == TruncatedSymPoly(1, 3, {(2,): 1})


def test_gdual_inner_must_be_contained():
    with pytest.raises(ValueError):
        GrothFamilyElement("gdual", (1,), (2,))


def test_gdual_is_a_polynomial_of_bounded_degree():
    for lam in partitions_upto(4):
        p = gdual(lam, nvars=4, degcap=8)
        assert all(mu.size <= lam.size for mu in p.coeffs)


def test_single_var_examples():
    assert single_var_value((5, 3, 3, 1), (4, 3, 2), 1) == 4
    assert single_var_value((1, 1), EMPTY, F(2, 3)) == 0
    t = F(1, 3)
    assert single_var_value((3, 1), (3, 1), t) == (1 + t) ** 2


def test_single_var_matches_realization():
    for lam in partitions_upto(4):
        for mu in partitions_upto(lam.size):
            if lam.contains(mu):
                p = gtilde(lam, mu, nvars=1, degcap=12)
                assert p.evaluate((F(1, 2),)) == single_var_value(lam, mu, F(1, 2))


def test_schur_expansion_examples():
    assert schur_expansion_gtilde((1,), 3) == BasisVector("schur", {(1,): 1, (1, 1): 1, (1, 1, 1): 1})
    assert schur_expansion_gtilde((2,), 4) == BasisVector("schur", {(2,): 1, (2, 1): 1, (2, 1, 1): 1})
    assert schur_expansion_gtilde(EMPTY, 3) == BasisVector.unit("schur", EMPTY)


def test_schur_expansion_matches_realization():
    for lam in partitions_upto(3):
        assert schur_expansion_gtilde(lam, 5) == to_schur(gtilde(lam, nvars=5, degcap=5))


def test_schur_in_gtilde_examples():
    vec = schur_in_gtilde((1,))
    assert vec[(1,)] == 1 and vec[(1, 1)] == -1 and vec[(1, 1, 1)] == 1
    assert schur_in_gtilde(EMPTY) == gt({EMPTY: 1})


def test_schur_gtilde_round_trip():
    for lam in partitions_upto(4):
        back = groth.gtilde_to_schur(schur_in_gtilde(lam, cap=lam.size + 6), lam.size + 6)
        assert back == BasisVector.unit("schur", lam)


def test_pieri_examples():
    assert pieri(1, (1,)) == gt({(2,): 1, (1, 1): 1, (2, 1): 1})
    assert pieri(1, (2,)) == gt({(3,): 1, (2, 1): 1, (3, 1): 1})
    assert pieri(2, EMPTY) == gt({(2,): 1})


def test_structure_constants_examples():
    assert structure_constants((1,), (1,)) == gt({(2,): 1, (1, 1): 1, (2, 1): 1})
    assert structure_constants((1,), EMPTY) == gt({(1,): 1})
    assert structure_constants((2,), (1,)) == pieri(1, (2,))


def test_pieri_matches_structure_constants():
    for k in (1, 2, 3):
        for lam in partitions_upto(4):
            assert pieri(k, lam) == structure_constants((k,), lam), (k, lam)


def test_structure_constants_are_nonnegative_integers_with_lr_bottom():
    for mu in partitions_upto(2):
        for nu in partitions_upto(2):
            c = structure_constants(mu, nu)
            assert all(v > 0 and v.denominator == 1 for _, v in c.items())
            n = mu.size + nu.size
            bottom = {lam: v for lam, v in c.items() if lam.size == n}
            d = max(n, 1)
            lr = to_schur(classical_basis("s", mu, d, d) * classical_basis("s", nu, d, d))
            assert bottom == lr.support


def test_skew_expansion_examples():
    assert skew_expansion(EMPTY, EMPTY) == gt({EMPTY: 1})
    assert skew_expansion((1,), (1,)) == gt({EMPTY: 1, (1,): 1})


def test_skew_expansion_conjugation_symmetry():
    for lam in partitions_upto(4):
        for mu in partitions_upto(lam.size):
            if lam.contains(mu):
                assert tau(skew_expansion(lam, mu)) == skew_expansion(conjugate(lam), conjugate(mu))


def test_f_mu_examples():
    det, dele, ok = f_mu((1,))
    assert ok and det == gt({(1,): 1, (2,): 1})
    det, dele, ok = f_mu(EMPTY)
    assert ok and det == gt({EMPTY: 1})
    det, dele, ok = f_mu((1, 1))
    assert ok and det[(1, 1)] == 1
    assert all(len(nu) == 2 and nu[0] <= 3 for nu in det)


def test_h_elements_examples():
    assert h_elements(0) == gt({EMPTY: 1, (1,): 1})
    assert not h_elements(-3)
    assert h_elements(2) == gt({(2,): 1, (3,): 1})


def test_h_element_factorization():
    h0 = h_element_poly(0, 6, 6)
    for n in range(1, 6):
        assert h_element_poly(n, 6, 6) == h0 * classical_basis("h", n, 6, 6)


def test_h0_generating_function():
    assert h0_generating_check(4, 4, 4)


def test_signed_examples():
    assert gsigned((1,), nvars=2, degcap=2) == TruncatedSymPoly(2, 2, {(1,): 1, (1, 1): -1})
    ones = (1, 1)
    assert gsigned((2, 1), nvars=2, degcap=8).evaluate(ones) == 1
    assert gsigned((1, 1, 1), nvars=2, degcap=8).evaluate(ones) == 0


def test_signed_corner_is_product():
    p = gsigned((1,), (1,), nvars=3, degcap=3)
    assert p == TruncatedSymPoly(3, 3, {EMPTY: 1, (1,): -1, (1, 1): 1, (1, 1, 1): -1})


def test_signed_sign_law():
    for lam in partitions_upto(4):
        p = gsigned(lam, nvars=6, degcap=6)
        for mu, c in p.items():
            assert (c > 0) == ((mu.size - lam.size) % 2 == 0)


def test_first_row_removal_examples():
    assert first_row_removal_check((2,), EMPTY, 3, 3)
    assert first_row_removal_check((1,), EMPTY, 3, 3)
    assert first_row_removal_check((2, 1), EMPTY, 3, 3)


def test_omega_examples():
    assert omega(BasisVector("schur", {(2,): 1, (1, 1): 1})) == BasisVector("schur", {(1, 1): 1, (2,): 1})
    assert omega_identity_check((1,), 3, 3)
    for lam in partitions_upto(5):
        v = BasisVector("schur", {lam: 3, (1,): -1})
        assert omega(omega(v)) == v


def test_omega_identity_small():
    for lam in partitions_upto(3):
        assert omega_identity_check(lam, 4, 4)


def test_tauhat_examples():
    assert tauhat_check((2, 1), (2, 1), 4, 4)
    assert tauhat_check((2,), EMPTY, 4, 4)
    for n in range(1, 6):
        h = classical_basis("h", n, 5, 5)
        assert groth.tauhat(groth.tauhat(h)) == h


def test_tauhat_on_small_shapes():
    for lam in partitions_upto(4):
        assert tauhat_check(lam, EMPTY, 4, 4)


def test_duality_examples():
    assert duality_check(1)
    assert duality_check(3)
    assert hall_pairing_G_g((2,), (1, 1)) == 0
    keys, mg, md = duality_matrices(2)
    assert keys == [(), (1,), (2,), (1, 1)]
    assert md[(2,)] == BasisVector.unit("schur", (2,))


def test_branching_gtilde():
    for lam in partitions_upto(4):
        for mu in partitions_upto(lam.size):
            if lam.contains(mu):
                assert branching_check("Gtilde", lam, mu, (2, 2), 5), (lam, mu)


def test_branching_gdual():
    for lam in partitions_upto(5):
        for mu in partitions_upto(lam.size):
            if lam.contains(mu):
                assert branching_check("gdual", lam, mu, (2, 2), 5), (lam, mu)


def test_gdual_schur_round_trip():
    for lam in partitions_upto(4):
        assert groth.schur_to_gdual(groth.gdual_to_schur(BasisVector.unit("gdual", lam))) == BasisVector.unit("gdual", lam)


def test_expansion_coefficients_are_tableau_counts():
    for lam in partitions_upto(3):
        sch = schur_expansion_gtilde(lam, 6)
        for mu, c in sch.items():
            assert c == count_strict_elegant(mu, lam)
        inv = schur_in_gtilde(lam, cap=6)
        for mu, c in inv.items():
            assert c == (-1) ** (mu.size - lam.size) * count_elegant(mu, lam)
