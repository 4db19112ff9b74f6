import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from berger.ambient import SpaceKind, euclidean_ip, frame_at, is_tangent, on_manifold
from berger.errors import (
    DegenerateInducedMetric,
    DegenerateTorus,
    HypothesisViolated,
    IndefiniteInducedMetric,
    NoSolution,
)
from berger.metric import LORENTZIAN, RIEMANNIAN, BergerParams, ModelSpec, berger_ip
from berger.torus import (
    FundamentalForm,
    TorusPoint,
    closed_form_h_norm,
    closed_form_second_ff_alpha,
    cmc_solve,
    embed,
    first_fundamental_form,
    gram_schmidt_basis,
    induced_form,
    mean_curvature,
    partials,
    second_ff_alpha,
    second_ff_beta,
)

from conftest import CASES

S3, SIG = SpaceKind.S3, SpaceKind.SIGMA3
param = st.floats(0.5, 2.0)
angle = st.floats(-math.pi, math.pi)


def spec(space=S3, lam=1.0, mu=1.0, nu=1.0, sig=RIEMANNIAN):
    return ModelSpec(space, BergerParams(lam, mu, nu), sig)


def test_embed_examples():
    r = 1 / math.sqrt(2)
    np.testing.assert_allclose(embed(S3, TorusPoint(math.pi / 4)), [r, 0, r, 0], atol=1e-16)
    np.testing.assert_allclose(
        embed(S3, TorusPoint(math.pi / 3, math.pi / 2)), [0, 0.5, math.sqrt(3) / 2, 0], atol=1e-15
    )
    p = embed(SIG, TorusPoint(1.0))
    np.testing.assert_allclose(p, [math.cosh(1), 0, math.sinh(1), 0])
    assert on_manifold(p, SIG, tol=1e-14)


@pytest.mark.parametrize("space,theta", [(S3, 0.0), (S3, math.pi / 2), (S3, 2.0), (SIG, 0.0), (SIG, -1.0)])
def test_degenerate_theta(space, theta):
    with pytest.raises(DegenerateTorus):
        embed(space, TorusPoint(theta))
    with pytest.raises(DegenerateTorus):
        mean_curvature(spec(space), TorusPoint(theta))


def test_partials_examples(rng):
    d = partials(S3, TorusPoint(math.pi / 4))
    np.testing.assert_allclose(d.d_alpha, [0, 1 / math.sqrt(2), 0, 0], atol=1e-16)
    for space in (S3, SIG):
        for _ in range(20):
            tp = TorusPoint(rng.uniform(0.1, 1.4), *rng.uniform(-3, 3, 2))
            d = partials(space, tp)
            p = embed(space, tp)
            assert euclidean_ip(d.d_alpha, d.d_beta) == 0
            for v in d:
                assert is_tangent(p, v, space)


def test_first_form_examples():
    f = first_fundamental_form(spec(), TorusPoint(math.pi / 4))
    assert (f.E, f.F, f.G) == pytest.approx((0.5, 0, 0.5), abs=1e-15)


@settings(max_examples=100, deadline=None)
@given(lam=param, mu=param, nu=param, theta=st.floats(0.1, 1.4), a=angle, b=angle)
def test_first_form_identities(lam, mu, nu, theta, a, b):
    tp = TorusPoint(theta, a, b)
    f = first_fundamental_form(spec(S3, lam, mu, nu), tp)
    assert abs(f.F - (-f.E + lam**2 * math.cos(theta) ** 2)) <= 1e-12
    assert abs(f.G - (f.E + lam**2 * (math.sin(theta) ** 2 - math.cos(theta) ** 2))) <= 1e-12
    h = first_fundamental_form(spec(S3, lam, mu, nu, LORENTZIAN), tp)
    assert abs(h.G - (h.E - lam**2 * (math.sin(theta) ** 2 - math.cos(theta) ** 2))) <= 1e-12
    ch, sh = math.cosh(theta) ** 2, math.sinh(theta) ** 2
    g = first_fundamental_form(spec(SIG, lam, mu, nu), tp)
    assert abs(g.G - (g.E - lam**2 * (ch + sh))) <= 1e-12
    h = first_fundamental_form(spec(SIG, lam, mu, nu, LORENTZIAN), tp)
    assert abs(h.G - (h.E + lam**2 * (ch + sh))) <= 1e-12


@pytest.mark.parametrize("case", CASES, ids=lambda c: f"{c[0].value}-{c[1].name}")
def test_first_form_matches_metric(case, rng):
    for lam, mu, nu, t, a, b in np.column_stack([rng.uniform(0.5, 2, (100, 3)), rng.uniform(0.1, 1.4, 100), rng.uniform(-3, 3, (100, 2))]):
        s, tp = spec(case[0], lam, mu, nu, case[1]), TorusPoint(t, a, b)
        x, y = first_fundamental_form(s, tp), induced_form(s, tp)
        assert max(abs(x.E - y.E), abs(x.F - y.F), abs(x.G - y.G)) <= 1e-12


def test_gram_schmidt():
    assert gram_schmidt_basis(FundamentalForm(1, 0, 1)) == (1, 0, 1)
    f = gram_schmidt_basis(FundamentalForm(0.5, 0, 0.5))
    assert f == pytest.approx((math.sqrt(2), 0, math.sqrt(2)))
    with pytest.raises(IndefiniteInducedMetric):
        gram_schmidt_basis(FundamentalForm(-1, 0, 1))


def test_gram_schmidt_orthonormal_under_metric():
    s, tp = spec(S3, 1.2, 0.8, 1.5), TorusPoint(0.6, 0.3, 1.0)
    f1, f2, f3 = gram_schmidt_basis(induced_form(s, tp))
    d = partials(S3, tp)
    p = embed(S3, tp)
    v1, v2 = f1 * d.d_alpha, f2 * d.d_alpha + f3 * d.d_beta
    assert berger_ip(p, v1, v1, s) == pytest.approx(1, abs=1e-12)
    assert berger_ip(p, v2, v2, s) == pytest.approx(1, abs=1e-12)
    assert berger_ip(p, v1, v2, s) == pytest.approx(0, abs=1e-12)


def test_second_ff_unit_params(rng):
    for _ in range(20):
        t, a, b = rng.uniform(0.1, 1.4), *rng.uniform(-3, 3, 2)
        bf = second_ff_alpha(spec(lam=rng.uniform(0.5, 2)), TorusPoint(t, a, b))
        k = math.sin(t) * math.cos(t)
        assert bf.y == pytest.approx(-k * math.cos(a + b), abs=1e-12)
        assert bf.z == pytest.approx(k * math.sin(a + b), abs=1e-12)
        assert abs(bf.x) <= 1e-12 and abs(bf.n) <= 1e-12


@pytest.mark.parametrize("space", [S3, SIG])
def test_second_ff_closed_form_and_signature(space, rng):
    for lam, mu, nu in rng.uniform(0.5, 2, (50, 3)):
        tp = TorusPoint(rng.uniform(0.1, 1.4), *rng.uniform(-3, 3, 2))
        g = second_ff_alpha(spec(space, lam, mu, nu), tp)
        h = second_ff_alpha(spec(space, lam, mu, nu, LORENTZIAN), tp)
        by, bz = closed_form_second_ff_alpha(spec(space, lam, mu, nu), tp)
        assert abs(g.y - by) <= 1e-10 and abs(g.z - bz) <= 1e-10
        assert abs(g.y - h.y) <= 1e-12 and abs(g.z - h.z) <= 1e-12
        bb = second_ff_beta(spec(space, lam, mu, nu), tp)
        assert max(abs(u + v) for u, v in zip(g, bb)) <= 1e-12


def test_mean_curvature_examples():
    for lam in (0.5, 1.0, 1.7):
        for a, b in ((0, 0), (0.4, 2.0)):
            for sig in (RIEMANNIAN, LORENTZIAN):
                geo = mean_curvature(spec(S3, lam, sig=sig), TorusPoint(math.pi / 4, a, b))
                assert geo.h_norm <= 1e-12 and geo.minimal
    assert mean_curvature(spec(), TorusPoint(math.pi / 8)).h_norm == pytest.approx(1, abs=1e-12)
    geo = mean_curvature(spec(SIG), TorusPoint(0.5 * math.atanh(0.5)))
    assert geo.h_norm == pytest.approx(2, abs=1e-10)
    assert not geo.minimal


def test_surface_geometry_invariants():
    s, tp = spec(SIG, 1.1, 0.7, 1.8, LORENTZIAN), TorusPoint(0.9, 0.2, -0.4)
    geo = mean_curvature(s, tp)
    f = geo.form
    ratio = (f.G - f.E) / f.det
    for k in "yz":
        assert getattr(geo.trace_b, k) == pytest.approx(ratio * getattr(geo.b_alpha, k), rel=1e-13)
        assert getattr(geo.h, k) == pytest.approx(getattr(geo.trace_b, k) / 2, rel=1e-15)
    assert abs(geo.h.x) <= 1e-12
    assert geo.h_norm == pytest.approx(closed_form_h_norm(s, tp), rel=1e-12)


@settings(max_examples=100, deadline=None)
@given(lam=param, lam2=param, mu=param, nu=param, theta=st.floats(0.1, 1.4), a=angle, b=angle)
def test_lambda_independence(lam, lam2, mu, nu, theta, a, b):
    for space in (S3, SIG):
        tp = TorusPoint(theta, a, b)
        h1 = mean_curvature(spec(space, lam, mu, nu), tp)
        h2 = mean_curvature(spec(space, lam2, mu, nu), tp)
        assert max(abs(u - v) for u, v in zip(h1.h, h2.h)) <= 1e-12
        assert abs(h1.h_norm - h2.h_norm) <= 1e-12


@settings(max_examples=100, deadline=None)
# past t ~ 4.5 the gap 1/tanh(2t) - 1 ~ 2e^{-4t} drops below the rounding of
# G - E, which grows like e^{4t}; 3.5 leaves four orders of margin
@given(mu=param, theta=st.floats(0.01, 3.5))
def test_sigma3_never_below_one_over_mu(mu, theta):
    assert mean_curvature(spec(SIG, 1.0, mu, mu), TorusPoint(theta)).h_norm > 1 / mu


def test_degenerate_induced_metric():
    with pytest.raises(DegenerateInducedMetric):
        mean_curvature(spec(), TorusPoint(1e-9))


def test_cmc_examples():
    assert cmc_solve(spec(), 0.0).thetas == pytest.approx((math.pi / 4,))
    assert cmc_solve(spec(), 1.0).thetas == pytest.approx((math.pi / 8, 3 * math.pi / 8))
    with pytest.raises(NoSolution):
        cmc_solve(spec(SIG), 0.5)
    with pytest.raises(NoSolution):
        cmc_solve(spec(SIG), 0.0)
    with pytest.raises(HypothesisViolated):
        cmc_solve(spec(mu=1.0, nu=1.1), 1.0)
    with pytest.raises(ValueError):
        cmc_solve(spec(), -1.0)


@pytest.mark.parametrize("space", [S3, SIG])
def test_cmc_bisection_agrees(space, rng):
    for mu, lam in rng.uniform(0.5, 2, (10, 2)):
        s = spec(space, lam, mu, mu)
        C = rng.uniform(1.05, 4.0) / mu
        a = cmc_solve(s, C)
        b = cmc_solve(s, C, method="bisection")
        assert len(a.thetas) == len(b.thetas)
        assert np.max(np.abs(np.subtract(a.thetas, b.thetas))) <= 1e-12
        assert max(b.residuals) <= 1e-10
    assert cmc_solve(spec(S3, 1.3, 0.8, 0.8), 0.0, method="bisection").thetas == pytest.approx(
        (math.pi / 4,), abs=1e-13
    )


@pytest.mark.parametrize("space", [S3, SIG])
@pytest.mark.parametrize("sig", [RIEMANNIAN, LORENTZIAN], ids=lambda s: s.name)
def test_cmc_round_trip(space, sig, rng):
    for mu, lam, u in zip(*rng.uniform(0.5, 2, (2, 30)), rng.uniform(1.01, 5, 30)):
        s = spec(space, lam, mu, mu, sig)
        C = u / mu
        sol = cmc_solve(s, C)
        assert len(sol.thetas) == (2 if space is S3 else 1)
        assert list(sol.thetas) == sorted(sol.thetas)
        for t in sol.thetas:
            assert abs(mean_curvature(s, TorusPoint(t, 0.7, 0.2)).h_norm - C) <= 1e-10
