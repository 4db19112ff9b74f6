"""Acceptance criteria, one test each. Every test prints a PASS/FAIL line;
run ``python tests/test_acceptance.py`` for just those nine lines."""
import math
import time

import numpy as np

from berger.ambient import SpaceKind
from berger.connection import Plane, sectional_curvature
from berger.errors import NoSolution
from berger.metric import LORENTZIAN, RIEMANNIAN, BergerParams, ModelSpec, Signature
from berger.torus import TorusPoint, cmc_solve, mean_curvature
from berger.verify import TABULATED_CASES, FdConfig, run_suite

ALL_SIGNATURES = [Signature(a, b, c) for a in (1, -1) for b in (1, -1) for c in (1, -1)]


def report(number, title, passed, detail):
    print(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title} ({detail})")
    return passed


def _suite(names, samples, specs=TABULATED_CASES, seed=42):
    return run_suite(specs, FdConfig(samples=samples, seed=seed), only=set(names))


def _summary(r):
    worst = max((c for c in r.checks if not c.expected_fail), key=lambda c: c.max_abs_deviation / max(c.tolerance, 1e-300))
    return f"{len(r.checks)} checks, worst {worst.name} {worst.max_abs_deviation:.3g} <= {worst.tolerance:g}"


def criterion_1():
    spec = ModelSpec(SpaceKind.S3)
    dev = max(abs(sectional_curvature(spec, p) - 1.0) for p in Plane)
    return report(1, "round sphere K = 1", dev <= 1e-12, f"max |K - 1| = {dev:.3g}")


def criterion_2():
    t = time.perf_counter()
    r = _suite(["connection_oracle"], 1000)
    dt = time.perf_counter() - t
    ok = r.ok and dt < 1.0 and all(c.cases == 1000 for c in r.checks)
    return report(2, "Koszul equals the closed-form tables", ok, f"{_summary(r)}, {dt:.2f} s")


def criterion_3():
    names = [f"curvature_closed_form_{p.name.lower()}" for p in Plane] + ["curvature_yz_as_printed"]
    r = _suite(names, 1000)
    xf = [c for c in r.checks if c.expected_fail]
    # the misprinted Sigma^3 Riemannian K(Y,Z) must be caught, and only that one
    ok = r.ok and len(xf) == 1 and not xf[0].passed
    detail = f"{_summary(r)}; as-printed sigma3 K(Y,Z) off by {xf[0].max_abs_deviation:.3g} (expected fail)"
    return report(3, "curvature closed forms", ok, detail)


def criterion_4():
    t = time.perf_counter()
    b = _suite([f"sign_region_boundary_{p.name.lower()}" for p in Plane], 100)
    i = _suite([f"sign_region_interior_{p.name.lower()}" for p in Plane], 1000)
    dt = time.perf_counter() - t
    ok = b.ok and i.ok and dt < 2.0
    n = len(b.checks)
    bad = sum(not c.passed for c in i.checks)
    cases = sum(c.cases for c in i.checks)
    detail = f"{n} inequalities, boundary {_summary(b)}, interior {bad} of {n} disagree over {cases} samples, {dt:.2f} s"
    return report(4, "sign regions", ok, detail)


def criterion_5():
    t = time.perf_counter()
    r = _suite(["h_closed_form", "h_fd_pipeline"], 500)
    dt = time.perf_counter() - t
    ok = r.ok and dt < 5.0
    return report(5, "mean curvature closed form and FD", ok, f"{_summary(r)}, {dt:.2f} s")


def criterion_6():
    rng = np.random.default_rng(6)
    worst_min = 0.0
    for sig in (RIEMANNIAN, LORENTZIAN):
        for lam, mu, nu, a, b in np.column_stack([rng.uniform(0.5, 2, (200, 3)), rng.uniform(-math.pi, math.pi, (200, 2))]):
            spec = ModelSpec(SpaceKind.S3, BergerParams(lam, mu, nu), sig)
            worst_min = max(worst_min, mean_curvature(spec, TorusPoint(math.pi / 4, a, b)).h_norm)
    counts_ok, worst_res = True, 0.0
    for sig in (RIEMANNIAN, LORENTZIAN):
        for lam, mu, u in zip(rng.uniform(0.5, 2, 100), rng.uniform(0.5, 2, 100), rng.uniform(0, 5, 100)):
            s3 = ModelSpec(SpaceKind.S3, BergerParams(lam, mu, mu), sig)
            for C, n in ((0.0, 1), (u + 1e-3, 2)):
                sol = cmc_solve(s3, C)
                counts_ok &= len(sol.thetas) == n
                worst_res = max(worst_res, *sol.residuals)
            sg = ModelSpec(SpaceKind.SIGMA3, BergerParams(lam, mu, mu), sig)
            sol = cmc_solve(sg, (1.0 + 1e-3 + u) / mu)
            counts_ok &= len(sol.thetas) == 1
            worst_res = max(worst_res, *sol.residuals)
            for C in (0.0, u / 5 / mu, 1.0 / mu):
                try:
                    cmc_solve(sg, C)
                    counts_ok = False
                except NoSolution:
                    pass
    ok = worst_min <= 1e-12 and counts_ok and worst_res <= 1e-10
    detail = f"Clifford |H| <= {worst_min:.3g}, solution counts {'ok' if counts_ok else 'WRONG'}, residual <= {worst_res:.3g}"
    return report(6, "minimality and CMC solutions", ok, detail)


def criterion_7():
    r = _suite(["signature_invariance"], 500)
    return report(7, "signature invariance of trace B, H, |H|", r.ok, _summary(r))


def criterion_8():
    specs = [ModelSpec(sp, BergerParams(), sig) for sp in SpaceKind for sig in ALL_SIGNATURES]
    r = _suite(["torsion_free", "metric_compatible"], 1000, specs)
    return report(8, "torsion-free and metric-compatible", r.ok, _summary(r))


def criterion_9():
    cfg = FdConfig(samples=1000, seed=42)
    t = time.perf_counter()
    a = run_suite(TABULATED_CASES, cfg).to_json()
    dt = time.perf_counter() - t
    b = run_suite(TABULATED_CASES, cfg).to_json()
    c = run_suite(TABULATED_CASES, cfg, workers=4).to_json()
    ok_report = run_suite(TABULATED_CASES, FdConfig(samples=1, seed=42)).ok
    passed = a == b == c and dt < 10.0 and '"ok": true' in a and ok_report
    return report(9, "full suite under 10 s, byte-deterministic", passed, f"{dt:.2f} s, identical across runs and 1/4 threads: {a == b == c}")


def test_criterion_1_round_sphere():
    assert criterion_1()


def test_criterion_2_connection_oracle():
    assert criterion_2()


def test_criterion_3_curvature_closed_forms():
    assert criterion_3()


def test_criterion_4_sign_regions():
    assert criterion_4()


def test_criterion_5_mean_curvature():
    assert criterion_5()


def test_criterion_6_minimality_and_cmc():
    assert criterion_6()


def test_criterion_7_signature_invariance():
    assert criterion_7()


def test_criterion_8_connection_axioms():
    assert criterion_8()


def test_criterion_9_full_suite():
    assert criterion_9()


if __name__ == "__main__":
    results = [f() for f in (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                             criterion_6, criterion_7, criterion_8, criterion_9)]
    raise SystemExit(0 if all(results) else 1)
