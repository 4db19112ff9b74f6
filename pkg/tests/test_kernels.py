"""The compiled and pure-Python backends must agree bit for bit."""
import numpy as np
import pytest

from berger import _core_py, _kernels

core = pytest.importorskip("berger._core")


def _inputs(rng, n=200):
    params = rng.uniform(0.5, 2.0, (n, 3))
    pts = np.column_stack([rng.uniform(0.1, 1.4, n), rng.uniform(-3, 3, (n, 2))])
    return params, pts


@pytest.mark.parametrize("sigma", [1.0, -1.0])
@pytest.mark.parametrize("eps", [(1, 1, 1), (-1, 1, 1), (1, -1, -1)])
@pytest.mark.parametrize("fd", [0.0, 1e-5])
def test_surface_batch_parity(sigma, eps, fd, rng):
    params, pts = _inputs(rng)
    a, b = np.empty((len(params), 16)), np.empty((len(params), 16))
    core.surface_batch(sigma, eps, params, pts, fd, 1e-3, a)
    _core_py.surface_batch(sigma, eps, params, pts, fd, 1e-3, b)
    np.testing.assert_array_equal(a, b)


@pytest.mark.parametrize("sigma", [1.0, -1.0])
@pytest.mark.parametrize("eps", [(1, 1, 1), (-1, 1, 1), (1, -1, 1)])
def test_connection_batch_parity(sigma, eps, rng):
    params, _ = _inputs(rng)
    ga, gb = np.empty((len(params), 27)), np.empty((len(params), 27))
    na, nb = np.empty((len(params), 3)), np.empty((len(params), 3))
    core.connection_batch(sigma, eps, params, ga, na)
    _core_py.connection_batch(sigma, eps, params, gb, nb)
    np.testing.assert_array_equal(ga, gb)
    np.testing.assert_array_equal(na, nb)


def test_scalar_parity(rng):
    for sigma in (1.0, -1.0):
        p, q, v = (tuple(rng.standard_normal(4)) for _ in range(3))
        assert tuple(core.mul(sigma, p, q)) == tuple(_core_py.mul(sigma, p, q))
        assert tuple(core.pullback(sigma, p, q)) == tuple(_core_py.pullback(sigma, p, q))
        s = (1.2, 0.7, 1.9)
        assert core.inner(sigma, (-1, 1, 1), s, p, q, v) == _core_py.inner(sigma, (-1, 1, 1), s, p, q, v)
        assert tuple(core.embed(sigma, 0.6, 0.2, 1.1)) == tuple(_core_py.embed(sigma, 0.6, 0.2, 1.1))


def test_degenerate_rows_are_nan():
    params = np.array([[1.0, 1.0, 1.0]])
    pts = np.array([[1e-9, 0.0, 0.0]])
    out = np.empty((1, 16))
    _kernels.surface_batch(1.0, (1, 1, 1), params, pts, 0.0, 0.0, out)
    assert abs(out[0, 3]) < _kernels.DET_CUTOFF
    assert np.all(np.isnan(out[0, 4:]))


def test_backend_selected():
    assert _kernels.BACKEND in ("cython", "python")
