"""Acceptance criteria 1-10.  Each test prints one PASS/FAIL line."""
import time

import pytest

from locgentle import (
    RationalFunction,
    WeightFunction,
    cartan_exact,
    cartan_series_oracle,
    count_closed,
    critical_quiver_from,
    det_elimination,
    det_formula,
    dual,
    enumerate_Pn_prime,
    euler_characteristic_check,
    gldim_finite,
    hz_a_n1,
    hz_polynomial_check,
    is_closed,
    is_critical,
    is_gentle,
    minimal_cycles,
    parse_polynomial,
    reduce_step,
    reduction_candidates,
    specialize_corollaries,
    verify_diagonalization,
    verify_duality,
)
from locgentle.cartan import matmul

from conftest import uniform
from golden import CARTAN_Q, CARTAN_QDUAL, TRIANGLES_DET


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\nCRITERION {number:>2} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail
    return emit


def test_criterion_01_golden_matrices(reduced_triangle, report):
    lgq, w = reduced_triangle
    t0 = time.perf_counter()
    cq, cd = cartan_exact(lgq, w), cartan_exact(dual(lgq), w)
    hits = sum(cq.entries[i][j].equals(CARTAN_Q[i][j]) + cd.entries[i][j].equals(CARTAN_QDUAL[i][j])
               for i in range(3) for j in range(3))
    dt = time.perf_counter() - t0
    report(1, hits == 18 and dt < 1, f"{hits}/18 golden entries, {dt:.3f}s (< 1s)")


def test_criterion_02_duality(reduced_triangle, generated, report):
    lgq, w = reduced_triangle
    t0 = time.perf_counter()
    neg = [[x.substitute({"t": -parse_polynomial("t")}) for x in row]
           for row in cartan_exact(dual(lgq), w).entries]
    prod = matmul(cartan_exact(lgq, w).entries, neg)
    golden_ok = all(prod[i][j].equals(int(i == j)) for i in range(3) for j in range(3))
    failures = sum(not verify_duality(q) for q in generated)
    dt = time.perf_counter() - t0
    ok = golden_ok and failures == 0 and len(generated) >= 200 and dt < 60
    report(2, ok, f"example identity={golden_ok}, corpus {len(generated)} quivers, {failures} failures, {dt:.2f}s (< 60s)")


def test_criterion_03_two_triangles_determinant(three_cycle_pair, report):
    lgq, w = three_cycle_pair
    t0 = time.perf_counter()
    f, e = det_formula(lgq, w), det_elimination(lgq, w)
    dt = time.perf_counter() - t0
    ok = f.equals(TRIANGLES_DET) and e.equals(TRIANGLES_DET) and dt < 1
    report(3, ok, f"formula={f}, elimination={e}, {dt:.3f}s (< 1s)")


def test_criterion_04_main_theorem(generated, report):
    t0 = time.perf_counter()
    failures = sum(not det_elimination(q).equals(det_formula(q)) for q in generated)
    dt = time.perf_counter() - t0
    report(4, failures == 0, f"{len(generated)} quivers, generic weights, {failures} failures, {dt:.2f}s")


def test_criterion_05_oracle(generated, report):
    N = 12
    t0 = time.perf_counter()
    failures = 0
    for q in generated:
        exact = cartan_exact(q).series(None, N)
        oracle = cartan_series_oracle(q, None, N)
        failures += exact != oracle
    dt = time.perf_counter() - t0
    report(5, failures == 0, f"N={N}, {len(generated)} quivers, {failures} mismatching matrices, {dt:.2f}s")


def test_criterion_06_corollary_two(generated, report):
    gentle = [q for q in generated if is_gentle(q)]
    t0 = time.perf_counter()
    failures = 0
    for q in gentle:
        zc, _ = minimal_cycles(q)
        even = any(c.length % 2 == 0 for c in zc)
        expected = 0 if even else 2 ** len(zc)
        # independent route: eliminate the integer Cartan matrix at x_e = 1
        ones = {f"x_{a.id}": 1 for a in q.arrows}
        at_one = det_elimination(q).evaluate(ones)
        cor = specialize_corollaries(q)
        failures += not (at_one == expected == cor.cor2 and cor.consistent and verify_diagonalization(q))
    dt = time.perf_counter() - t0
    report(6, failures == 0 and len(gentle) > 0, f"{len(gentle)} gentle quivers, {failures} failures, {dt:.2f}s")


def test_criterion_07_reduction(generated, three_cycle_pair, report):
    t0 = time.perf_counter()
    instances = failures = 0
    for q in generated:
        before = det_elimination(q)
        for cycle, v in reduction_candidates(q):
            out = reduce_step(q, None, cycle, v)
            instances += 1
            after = RationalFunction(out.factor_product()) * det_elimination(out.quiver, out.weights)
            failures += not before.equals(after)
    lgq, w = three_cycle_pair
    zc, _ = minimal_cycles(lgq, w)
    ex = reduce_step(lgq, w, zc[0], "1")
    extracted = ex.factor_product() == parse_polynomial("1 + q^3") ** 2
    dt = time.perf_counter() - t0
    ok = failures == 0 and instances > 0 and extracted
    report(7, ok, f"{instances} instances, {failures} failures, example extracts (1+q^3)^2={extracted}, {dt:.2f}s")


def test_criterion_08_harer_zagier(report):
    expected = {1: 0, 2: 1, 3: 0, 4: 21, 5: 0, 6: 1485}
    t0 = time.perf_counter()
    got = {}
    for n in range(1, 6):
        got[n] = (count_closed(n), hz_a_n1(n))
    t6 = time.perf_counter()
    got[6] = (count_closed(6), hz_a_n1(6))
    dt6 = time.perf_counter() - t6
    poly = all(hz_polynomial_check(n) for n in range(1, 6))
    ok = all(got[n] == (v, v) for n, v in expected.items()) and dt6 < 30 and poly
    counts = " ".join(str(got[n][0]) for n in sorted(got))
    report(8, ok, f"closed counts {counts}; n=6 in {dt6:.2f}s (< 30s); polynomial identity n=1..5 {poly}")


def test_criterion_09_critical_quivers(report):
    t0 = time.perf_counter()
    seen = {}
    failures = 0
    for n in (2, 4):
        seen[n] = 0
        for c in enumerate_Pn_prime(n):
            if is_closed(c):
                seen[n] += 1
                lgq, w = critical_quiver_from(c)
                failures += not (is_critical(lgq) and det_elimination(lgq, w).equals(1))
    dt = time.perf_counter() - t0
    ok = seen == {2: 1, 4: 21} and failures == 0 and dt < 30
    report(9, ok, f"n=2: {seen[2]}, n=4: {seen[4]} quivers, {failures} failures, {dt:.2f}s (< 30s)")


def test_criterion_10_koszul(generated, report):
    t0 = time.perf_counter()
    gl_bad = sum(gldim_finite(q) != (minimal_cycles(q)[0] == []) for q in generated)
    euler_bad = sum(not euler_characteristic_check(q, 10) for q in generated[:20])
    dt = time.perf_counter() - t0
    report(10, gl_bad == 0 and euler_bad == 0,
           f"gldim criterion {gl_bad} failures on {len(generated)}; Euler identity to t-degree 10: "
           f"{euler_bad} failures on 20; {dt:.2f}s")
