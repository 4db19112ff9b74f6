import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from berger.ambient import (
    IDENTITY,
    SpaceKind,
    as_complex,
    euclidean_ip,
    frame_at,
    from_complex,
    group_inv,
    group_mul,
    is_tangent,
    on_manifold,
    random_point,
    translate_to_identity,
)
from berger.errors import DomainError
from berger.metric import BergerParams

angles = st.floats(-math.pi, math.pi)


def test_identity_is_neutral(rng):
    for space in SpaceKind:
        p = random_point(space, rng)
        np.testing.assert_allclose(group_mul(IDENTITY, p, space), p, atol=1e-15)
        np.testing.assert_allclose(group_mul(p, IDENTITY, space), p, atol=1e-15)


def test_i_squared_is_minus_one():
    i = from_complex(1j, 0)
    np.testing.assert_allclose(group_mul(i, i, SpaceKind.S3), [-1, 0, 0, 0])


@given(st.floats(-2, 2), st.floats(-2, 2))
def test_sigma3_hyperbolic_addition(t, s):
    p = from_complex(math.cosh(t), math.sinh(t))
    q = from_complex(math.cosh(s), math.sinh(s))
    expected = [math.cosh(t + s), 0, math.sinh(t + s), 0]
    np.testing.assert_allclose(group_mul(p, q, SpaceKind.SIGMA3), expected, rtol=1e-13, atol=1e-13)


def test_inverses():
    i = from_complex(1j, 0)
    np.testing.assert_array_equal(group_inv(IDENTITY, SpaceKind.S3), IDENTITY)
    np.testing.assert_allclose(group_inv(i, SpaceKind.S3), [0, -1, 0, 0])
    np.testing.assert_allclose(group_mul(i, group_inv(i, SpaceKind.S3), SpaceKind.S3), IDENTITY)
    t = 0.8
    p = from_complex(math.cosh(t), math.sinh(t))
    np.testing.assert_allclose(group_inv(p, SpaceKind.SIGMA3), [math.cosh(t), 0, -math.sinh(t), 0])


@pytest.mark.parametrize("space", list(SpaceKind))
def test_inverse_off_manifold_rejected(space):
    with pytest.raises(DomainError):
        group_inv([2.0, 0, 0, 0], space)


@pytest.mark.parametrize("space", list(SpaceKind))
def test_associativity_and_closure(space, rng):
    for _ in range(100):
        p, q, r = (random_point(space, rng) for _ in range(3))
        lhs = group_mul(group_mul(p, q, space), r, space)
        rhs = group_mul(p, group_mul(q, r, space), space)
        assert np.max(np.abs(lhs - rhs)) <= 1e-12 * max(1.0, np.max(np.abs(lhs)))
        assert on_manifold(group_mul(p, q, space), space, tol=1e-12 * max(1.0, np.dot(lhs, lhs)))
        np.testing.assert_allclose(group_mul(p, group_inv(p, space), space), IDENTITY, atol=1e-12)


@pytest.mark.parametrize("space", list(SpaceKind))
def test_translation_undoes_multiplication(space, rng):
    p = random_point(space, rng)
    v = rng.standard_normal(4)
    np.testing.assert_allclose(translate_to_identity(p, group_mul(p, v, space), space), v, atol=1e-12)


def test_frame_examples():
    f = frame_at(IDENTITY, BergerParams(2, 1, 1), SpaceKind.S3)
    np.testing.assert_allclose(f.X, [0, 0.5, 0, 0])
    np.testing.assert_allclose(f.N, [1, 0, 0, 0])
    p = from_complex(0, 1)
    f = frame_at(p, BergerParams(), SpaceKind.S3)
    # (z1 z2 - conj(w1) w2, conj(z1) w2 + w1 z2) with (0,1).(i,0) gives (0, i)
    np.testing.assert_allclose(f.X, [0, 0, 0, 1], atol=1e-15)


@pytest.mark.parametrize("space", list(SpaceKind))
def test_frame_is_tangent(space, rng):
    params = BergerParams(1.3, 0.7, 1.9)
    for _ in range(50):
        p = random_point(space, rng)
        f = frame_at(p, params, space)
        for v in (f.X, f.Y, f.Z):
            assert is_tangent(p, v, space)
        assert not is_tangent(p, f.N, space)


def test_frame_domain_errors():
    with pytest.raises(DomainError):
        frame_at([1, 1, 0, 0], BergerParams(), SpaceKind.S3)

    class Bad:
        lam, mu, nu = 1.0, -1.0, 1.0

    with pytest.raises(DomainError):
        frame_at(IDENTITY, Bad(), SpaceKind.S3)


def test_euclidean_ip():
    assert euclidean_ip([1, 0, 0, 0], [1, 0, 0, 0]) == 1
    assert euclidean_ip([0, 1, 0, 0], [1, 0, 0, 0]) == 0
    assert euclidean_ip([1, 2, 3, 4], [4, 3, 2, 1]) == 20


def test_complex_view_roundtrip():
    p = from_complex(0.6 + 0.1j, -0.2 + 0.3j)
    assert as_complex(p) == (0.6 + 0.1j, -0.2 + 0.3j)


def test_space_parse():
    assert SpaceKind.parse("S3") is SpaceKind.S3
    assert SpaceKind.parse("sigma3") is SpaceKind.SIGMA3
    with pytest.raises(ValueError):
        SpaceKind.parse("h3")
