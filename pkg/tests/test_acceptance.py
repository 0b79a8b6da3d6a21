"""Acceptance suite: one PASS/FAIL line per criterion.

Run under pytest (lines appear in the terminal summary) or directly with
`python tests/test_acceptance.py`.
"""

from __future__ import annotations

import hashlib
import itertools
import random
import sys
import tempfile
import time
from fractions import Fraction
from pathlib import Path

import pytest

RESULTS: dict[int, str] = {}


def _record(n: int, title: str, checks: list[tuple[str, bool]], elapsed: float, limit: float | None):
    if limit is not None:
        checks = checks + [(f"runtime {elapsed:.1f}s < {limit:g}s", elapsed < limit)]
    ok = all(c for _, c in checks)
    failed = [name for name, c in checks if not c]
    detail = "; ".join(name for name, _ in checks)
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n:2d} {title}: {detail}"
    if failed:
        line += f"  <-- failed: {'; '.join(failed)}"
    RESULTS[n] = line
    print(line)
    return ok, failed


# --- 1 ---------------------------------------------------------------------------


def criterion_1():
    from prym.curves import WEIGHTS, chi, chi_polynomials
    from prym.exact import MPoly

    t0 = time.perf_counter()
    polys = chi_polynomials()
    v = MPoly.variables(4)
    symbolic = all(p.substitute(list(polys)) == 18**d * x for p, x, d in zip(polys, v, WEIGHTS))
    rng = random.Random(1)
    bad = 0
    for _ in range(10_000):
        b = tuple(rng.randint(-50, 50) for _ in range(4))
        twice = chi(chi(b))
        bad += any(t != 18**d * x for t, x, d in zip(twice, b, WEIGHTS))
    el = time.perf_counter() - t0
    return _record(1, "bigonal involution", [
        ("symbolic chi(chi(b)) = 18^d b", symbolic), (f"10^4 random b, {bad} mismatches", bad == 0),
    ], el, 10)


# --- 2 ---------------------------------------------------------------------------


def criterion_2():
    from prym.curves import chi_polynomials

    t0 = time.perf_counter()
    integral = [p.is_integral() for p in chi_polynomials()]
    return _record(2, "integrality of chi", [(f"integer coefficients {integral}", all(integral))], time.perf_counter() - t0, None)


# --- 3 ---------------------------------------------------------------------------


def criterion_3():
    from prym import lie as L

    t0 = time.perf_counter()
    alg = L.build_folded_f4()
    dims = (alg.dim, alg.g_dim, alg.v_dim)
    t = L.sl2_triple()
    triple = (
        alg.bracket(t.X, t.E) == [2 * x for x in t.E]
        and alg.bracket(t.X, t.F) == [-2 * x for x in t.F]
        and alg.bracket(t.E, t.F) == list(t.X)
    )
    rng = random.Random(3)
    n = bad_ker = bad_chart = 0
    while n < 100:
        c = tuple(rng.randint(-20, 20) for _ in range(4))
        v = L.slice_point(c)
        if L.lie_discriminant(v) == 0:
            continue
        n += 1
        bad_ker += L.adjoint_kernel_dim(v) != 4
        bad_chart += L.slice_coordinates(v) != tuple(Fraction(x) for x in c)
    el = time.perf_counter() - t0
    return _record(3, "Lie self-check", [
        (f"dims {dims}", dims == (52, 24, 28)), ("sl2 relations", triple),
        (f"kernel dim 4 on 100 points ({bad_ker} bad)", bad_ker == 0),
        (f"chart inverts the slice on 100 points ({bad_chart} bad)", bad_chart == 0),
    ], el, 60)


# --- 4 ---------------------------------------------------------------------------


def criterion_4():
    from prym import lie as L
    from prym.sp6 import WVector

    t0 = time.perf_counter()
    v = [0] * 28
    v[L.ANCHOR_ROW - 1] = 1
    img = L.psi(v)
    anchor = img.w1 == WVector.from_wedge({(2, 3, 4): 1}) and not any(img.w2.coords())
    res = L.equivariance_residuals()
    n_gen = len(L.g_generators())
    nonzero = sum(1 for r in res if r[2])
    return _record(4, "isomorphism Psi", [
        ("anchor X_alpha1 -> (e4^e2^e3, 0)", anchor),
        (f"{len(res)} = 28 x {n_gen} residuals, {nonzero} nonzero", len(res) == 28 * n_gen and nonzero == 0),
    ], time.perf_counter() - t0, None)


# --- 5 ---------------------------------------------------------------------------

EXPLICIT_W1 = (1, ((1, 2, 3), (4, 1, 0), (2, 0, 1)), ((1, 2, 3), (1, -2, -1), (2, 3, 1)), 0)
EXPLICIT_W2 = (-1, ((3, 2, 5), (-1, 0, 0), (0, 2, 1)), ((0, -3, 1), (2, 2, 1), (1, 1, 0)), 2)
EXPLICIT_Q = (376, 507, 1697, 846, 119)


def criterion_5():
    from prym.checks import resolvent_covariance
    from prym.lie import psi, slice_point
    from prym.sp6 import VElement, WVector, resolvent_quartic

    t0 = time.perf_counter()
    rng = random.Random(5)
    lead = 0
    for _ in range(100):
        c = tuple(rng.randint(-10, 10) for _ in range(4))
        lead += resolvent_quartic(psi(slice_point(c))).a != 0
    q = resolvent_quartic(VElement(WVector(*EXPLICIT_W1), WVector(*EXPLICIT_W2)))
    got = tuple(int(x) for x in q.coeffs)
    checked, fails = resolvent_covariance(samples=100, seed=5)
    return _record(5, "resolvent", [
        (f"x^4 coefficient zero on 100 slice points ({lead} nonzero)", lead == 0),
        (f"explicit pair gives {got}, expected {EXPLICIT_Q}", got == EXPLICIT_Q),
        (f"covariance on {checked} (g, v), {fails} failures", fails == 0),
    ], time.perf_counter() - t0, None)


# --- 6 ---------------------------------------------------------------------------


def criterion_6():
    from prym.quartics import BinaryQuartic, has_distinct_roots, is_squarefree_form

    t0 = time.perf_counter()
    checks = []
    for p in (5, 7):
        bad = n = 0
        for c in itertools.product(range(p), repeat=5):
            if not any(c):
                continue
            q = BinaryQuartic(*c)
            n += 1
            bad += has_distinct_roots(q, over=p) != is_squarefree_form(q, over=p)
        checks.append((f"F_{p}: {n} nonzero forms, {bad} disagreements", bad == 0))
    return _record(6, "quartic invariants", checks, time.perf_counter() - t0, 30)


# --- 7 ---------------------------------------------------------------------------


def criterion_7():
    from prym.curves import chi, discriminants, is_smooth_genus3

    t0 = time.perf_counter()
    rng = random.Random(7)
    smooth_bad = n_smooth = 0
    while n_smooth < 100:
        b = tuple(rng.randint(-20, 20) for _ in range(4))
        if discriminants(b)[2] == 0:
            continue
        n_smooth += 1
        smooth_bad += not is_smooth_genus3(b)
    sing_bad = 0
    for k in range(100):
        t = rng.choice([x for x in range(-6, 7) if x])
        s = (rng.randint(-9, 9), rng.randint(-9, 9), -3 * t * t, 2 * t**3)
        # even k: on the Ehat factor; odd k: pulled back so the E factor vanishes
        b = s if k % 2 == 0 else chi(s).scale(Fraction(1, 18))
        assert discriminants(b)[2] == 0
        sing_bad += is_smooth_genus3(b)
    return _record(7, "smoothness vs discriminant", [
        (f"100 smooth-side points, {smooth_bad} disagreements", smooth_bad == 0),
        (f"100 constructed singular points, {sing_bad} disagreements", sing_bad == 0),
    ], time.perf_counter() - t0, None)


# --- 8 ---------------------------------------------------------------------------


def criterion_8():
    from prym.curves import chi
    from prym.zeta import count_curve_points, count_elliptic_points, frobenius_data, is_admissible

    t0 = time.perf_counter()
    anchor = (count_curve_points((0, 0, -1, 0), 5), count_elliptic_points((0, 0, -1, 0), 5))
    rng = random.Random(8)
    n = fact_bad = weil_bad = dual_bad = 0
    for p in (7, 11, 13):
        done = 0
        while done < 10:
            b = tuple(rng.randint(-5, 5) for _ in range(4))
            if not is_admissible(b, p):
                continue
            done += 1
            n += 1
            fd = frobenius_data(b, p)
            prod = [0] * 7
            for i, x in enumerate(fd.l_elliptic):
                for j, y in enumerate(fd.l_prym):
                    prod[i + j] += x * y
            fact_bad += tuple(prod) != fd.l_curve
            weil_bad += not (fd.weil_ok() and fd.functional_equation_ok())
            dual_bad += fd.l_prym != frobenius_data(chi(b), p).l_prym
    return _record(8, "zeta and bigonal duality", [
        (f"anchor (#C, #E) = {anchor}", anchor == (8, 8)),
        (f"{n} (b, p) cases: L_C = L_E L_P fails {fact_bad}", fact_bad == 0),
        (f"Weil bounds fail {weil_bad}", weil_bad == 0),
        (f"L_P(b) = L_P(chi b) fails {dual_bad}", dual_bad == 0),
    ], time.perf_counter() - t0, 600)


# --- 9 ---------------------------------------------------------------------------


def criterion_9():
    from prym.census import monte_carlo_rs_density

    t0 = time.perf_counter()
    rep = monte_carlo_rs_density(7, 20_000, seed=1)
    return _record(9, "Monte Carlo density at p=7", [
        (f"R = {rep.slice_count}/2401, predicted {rep.predicted:.5f}, observed {rep.observed:.5f}, z = {rep.z:.2f}",
         rep.passed(4.0)),
    ], time.perf_counter() - t0, 300)


# --- 10 --------------------------------------------------------------------------


def criterion_10():
    from prym.roots import weyl_mod2_report

    t0 = time.perf_counter()
    r = weyl_mod2_report()
    return _record(10, "Weyl mod 2", [
        (f"|W| = {r.order_w}", r.order_w == 51840),
        (f"|centralizer| = {r.order_centralizer}", r.order_centralizer == 1152),
        (f"dims {(r.image_dim, r.fixed_dim)}, orders {r.filtration_orders[1:]}", r.filtration_orders[1:] == (4, 16, 64)),
        (f"Coxeter fixed space dim {r.coxeter_fixed_dim}", r.coxeter_fixed_dim == 0),
        (f"identity in C: {r.identity_in_c}, eta = {r.eta}", not r.identity_in_c and r.eta < 1),
    ], time.perf_counter() - t0, 120)


# --- 11 --------------------------------------------------------------------------


def criterion_11():
    from prym.cusp import verify_cusp_certificates

    t0 = time.perf_counter()
    rep = verify_cusp_certificates(spot_samples=3)
    return _record(11, "cusp suite", [
        (f"{len(rep.table_ok)} example rows verify", all(rep.table_ok)),
        ("weights column matches", all(rep.weights_ok)),
        (f"eligibility set {rep.eligibility}", rep.eligibility_ok),
        (f"{rep.total} admissible sets certified, {len(rep.failures)} failures", rep.total > 0 and not rep.failures),
        (f"{len(rep.subsets_ok)} reducibility subsets", all(s.endswith("ok") for s in rep.subsets_ok.values())),
    ], time.perf_counter() - t0, 60)


# --- 12 --------------------------------------------------------------------------

STATED_BOX_COUNT = 1_518_735


def criterion_12():
    from prym.census import BoxSpec, box_count, emit, enumerate_census

    t0 = time.perf_counter()
    empty = list(enumerate_census(1)) == []
    X = Fraction(3, 2)
    n = box_count(X)
    factors = tuple(2 * b + 1 for b in BoxSpec(X).bounds())
    product = factors[0] * factors[1] * factors[2] * factors[3]
    with tempfile.TemporaryDirectory() as tmp:
        digests = []
        for k in range(2):
            out = Path(tmp) / f"run{k}.csv"
            emit(enumerate_census(Fraction(5, 4), zeta_primes=(7,)), "csv", out, zeta_primes=(7,))
            digests.append(hashlib.sha256(out.read_bytes()).hexdigest())
    return _record(12, "census determinism and counts", [
        ("X=1 census empty", empty),
        (f"X=3/2 box count {n} = product of {factors}", n == product),
        (f"X=3/2 box count {n} equals the stated {STATED_BOX_COUNT}", n == STATED_BOX_COUNT),
        ("two identical runs are byte-identical", digests[0] == digests[1]),
    ], time.perf_counter() - t0, None)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


@pytest.mark.parametrize("k", range(1, 13))
def test_criterion(k):
    ok, failed = CRITERIA[k - 1]()
    assert ok, f"criterion {k} failed: {'; '.join(failed)}"


if __name__ == "__main__":
    results = [fn()[0] for fn in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
