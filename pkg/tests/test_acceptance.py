"""Acceptance criteria A1-A13.

Each test writes a single ``A<k> PASS|FAIL ...`` line to the terminal (visible
under ``pytest -v``) and then asserts.  Running this file directly prints the
same lines without pytest.
"""
import random
import sys
import time
from fractions import Fraction
from math import e

import pytest

from grothpos import groth
from grothpos.intervals import Interval, lower
from grothpos.measures import (
    corner_growth,
    corner_measure,
    harmonicity_check,
    hecke_measure,
    hecke_weight_total,
    plancherel_h_values,
)
from grothpos.shapes import EMPTY, Partition, partitions_upto
from grothpos.special import (
    EdreiThomaParams,
    GammaSpec,
    g_spec_h_values,
    gamma_value,
    gcond_value,
    induced_schur_spec,
    positivity_scan,
    schur_valuator,
    schur_value,
    signed_g_values,
    signed_monotone_chain,
)
from grothpos.tableaux import count_delegant, count_elegant, delegant_det, elegant_det
from grothpos.tnn import ToeplitzBand, is_totally_nonnegative

F = Fraction
_LINES: list[str] = []


def _report(request, label: str, ok: bool, detail: str = "") -> None:
    line = f"{label} {'PASS' if ok else 'FAIL'} {detail}".rstrip()
    _LINES.append(line)
    reporter = request.config.pluginmanager.get_plugin("terminalreporter") if request else None
    if reporter is not None:
        reporter.write_line("")
        reporter.write_line(line)
    else:
        print(line)
    assert ok, line


def _random_specs(count: int = 20, seed: int = 1004) -> list[GammaSpec]:
    rng = random.Random(seed)
    specs = []
    for _ in range(count):
        alphas = [F(rng.randint(0, 6), rng.randint(1, 6)) for _ in range(rng.randint(0, 3))]
        betas = [F(rng.randint(0, 4), rng.randint(5, 9)) for _ in range(rng.randint(0, 2))]
        gens = [("phi_hat", a) for a in alphas] + [("eps_hat", b) for b in betas]
        specs.append(GammaSpec(tuple(gens)))
    return specs


SPECS = _random_specs()


def test_a1_pieri_instance(request):
    start = time.perf_counter()
    got = groth.structure_constants((1,), (1,))
    elapsed = time.perf_counter() - start
    ok = got.support == {Partition((2,)): 1, Partition((1, 1)): 1, Partition((2, 1)): 1} and elapsed < 1
    _report(request, "A1", ok, f"({elapsed:.3f}s)")


def test_a2_two_oracle_agreement(request):
    start = time.perf_counter()
    shapes = [mu for mu in partitions_upto(5, max_length=3)]
    bad = [mu for mu in shapes if not groth.f_mu(mu)[2]]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 120
    _report(request, "A2", ok, f"{len(shapes)} shapes, disagreements={bad} ({elapsed:.1f}s)")


def test_a3_binomial_determinants(request):
    checked, bad = 0, []
    for nu in partitions_upto(6):
        for mu in partitions_upto(nu.size):
            if not nu.contains(mu):
                continue
            if mu and len(mu) == len(nu):
                checked += 1
                if count_delegant(nu, mu) != delegant_det(nu, mu):
                    bad.append(("d", nu, mu))
            if mu:
                checked += 1
                if count_elegant(nu, mu) != elegant_det(nu, mu):
                    bad.append(("f", nu, mu))
    _report(request, "A3", not bad, f"{checked} instances, mismatches={bad[:3]}")


def test_a4_branching(request):
    bad = []
    for lam in partitions_upto(4):
        for mu in partitions_upto(lam.size):
            if lam.contains(mu):
                for family in ("Gtilde", "gdual"):
                    if not groth.branching_check(family, lam, mu, (2, 2), 5):
                        bad.append((family, lam, mu))
    _report(request, "A4", not bad, f"failures={bad}")


def test_a5_toeplitz_tnn(request):
    bad = []
    for spec in SPECS:
        band = ToeplitzBand(induced_schur_spec(spec, 5), size=6)
        if is_totally_nonnegative(band, 4).status != "pass":
            bad.append(spec.generators)
    _report(request, "A5", not bad, f"{len(SPECS)} specs, failures={bad}")


def test_a6_induced_schur_positivity(request):
    bad = []
    for spec in SPECS:
        hv = induced_schur_spec(spec, 12)
        neg = [lam for lam in partitions_upto(6) if schur_value(hv, lam) < 0]
        if neg:
            bad.append((spec.generators, neg[0]))
    _report(request, "A6", not bad, f"{len(SPECS)} specs, failures={bad}")


def test_a7_normalized_harmonicity(request):
    pair = GammaSpec((("phi_hat", F(1, 2)), ("phi_hat", F(1, 3))), normalized=True)
    one = GammaSpec((("phi_hat", F(1)),))
    r1 = harmonicity_check(lambda lam: gamma_value(pair, lam), 6)
    r2 = harmonicity_check(lambda lam: gamma_value(one, lam), 6)
    _report(request, "A7", r1.passed and r2.passed, f"pair={r1.failure} phi1={r2.failure}")


def test_a8_signed_family(request):
    param_sets = [
        EdreiThomaParams((F(1, 2),)),
        EdreiThomaParams((F(1, 3), F(1, 4))),
        EdreiThomaParams((F(1),), (F(1, 2),)),
        EdreiThomaParams((F(2, 3),), (F(1, 5), F(3, 7))),
        EdreiThomaParams((), (F(2),)),
    ]
    chain_ok = all(signed_monotone_chain(signed_g_values(p, 10)) for p in param_sets)
    gcond_ok = all(gcond_value(p) == signed_g_values(p, 1)[1] for p in param_sets)
    bad = []
    for lam in partitions_upto(4):
        if not lam:
            continue
        rest = Partition(lam[1:])
        for mu in partitions_upto(rest.size):
            if rest.contains(mu) and not groth.first_row_removal_check(lam, mu, 3, 4):
                bad.append((lam, mu))
    ok = chain_ok and gcond_ok and not bad
    _report(request, "A8", ok, f"chain={chain_ok} gcond={gcond_ok} row-removal failures={bad}")


def test_a9_duality(request):
    _report(request, "A9", groth.duality_check(5), "block |λ|,|μ| <= 5")


def test_a10_corner_growth(request):
    conserved = all(corner_growth(n).total() == 1 for n in range(1, 9))
    hv = plancherel_h_values(6)
    planch = all(corner_measure(hv, n).total() == 1 for n in range(1, 7))
    p3 = dict(corner_growth(3).items())
    table = p3 == {Partition((3,)): F(1, 4), Partition((2, 1)): F(1, 2), Partition((1, 1, 1)): F(1, 4)}
    _report(request, "A10", conserved and planch and table, f"p_n={conserved} plancherel={planch} p3={table}")


def test_a11_plancherel_hecke(request):
    totals = all(hecke_weight_total(m, n) == n ** m for m in range(1, 6) for n in range(1, 6))
    specs = SPECS[:5] + [GammaSpec((("phi_hat", F(1, 2)),))]
    hecke = all(hecke_measure(s, n).total() == 1 for s in specs for n in range(0, 5))
    _report(request, "A11", totals and hecke and hecke_weight_total(2, 2) == 4, f"n^m={totals} M_phi={hecke}")


def test_a12_negative_control(request):
    psi = g_spec_h_values(EdreiThomaParams(betas=(F(1, 2),)), 4)
    found = positivity_scan(schur_valuator(psi), 2)
    _report(request, "A12", found == [(Partition((1, 1)), F(-1, 4))], f"violations={found}")


def test_a13_pi_hat_interval(request):
    v = gamma_value(GammaSpec((("pi_hat", F(1)),), truncation=12), (1,))
    ok = isinstance(v, Interval) and v.width < F(1, 10 ** 6) and v.lo < F(e - 1) < v.hi
    detail = f"width={float(v.width):.3g}" if isinstance(v, Interval) else f"value={v}"
    _report(request, "A13", ok, detail)


if __name__ == "__main__":
    failures = 0
    tests = [(name, fn) for name, fn in globals().items() if name.startswith("test_a") and callable(fn)]
    for name, fn in sorted(tests, key=lambda kv: int(kv[0].split("_")[1][1:])):
        try:
            fn(None)
        except AssertionError:
            failures += 1
    sys.exit(1 if failures else 0)
