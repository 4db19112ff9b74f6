"""Points and vectors of C^2 = R^4, the group laws of S^3 and Sigma^3, and
the left-invariant frame.

Points are plain length-4 float arrays ``(Re z, Im z, Re w, Im w)``; use
:func:`as_complex` / :func:`from_complex` for the complex view.
"""
import enum
from typing import NamedTuple

import numpy as np

from . import _kernels
from .errors import DomainError

MANIFOLD_TOL = 1e-9

IDENTITY = np.array([1.0, 0.0, 0.0, 0.0])
# (i,0), (0,-1), (0,i) at the identity, and the normal direction (1,0)
E_X = np.array([0.0, 1.0, 0.0, 0.0])
E_Y = np.array([0.0, 0.0, -1.0, 0.0])
E_Z = np.array([0.0, 0.0, 0.0, 1.0])
E_N = IDENTITY


class SpaceKind(enum.Enum):
    S3 = "s3"
    SIGMA3 = "sigma3"

    @property
    def sign(self) -> float:
        """Sign of the ``conj(w1) w2`` term in the group law."""
        return 1.0 if self is SpaceKind.S3 else -1.0

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        try:
            return cls(str(text).lower())
        except ValueError:
            raise ValueError(f"unknown space {text!r}; expected 's3' or 'sigma3'") from None


class FrameVectors(NamedTuple):
    base: np.ndarray
    X: np.ndarray
    Y: np.ndarray
    Z: np.ndarray
    N: np.ndarray


def as_point(p) -> np.ndarray:
    arr = np.asarray(p, dtype=float)
    if arr.shape != (4,):
        raise ValueError(f"expected 4 real coordinates, got shape {arr.shape}")
    return arr


def from_complex(z: complex, w: complex) -> np.ndarray:
    return np.array([z.real, z.imag, w.real, w.imag])


def as_complex(p) -> tuple:
    x1, x2, x3, x4 = as_point(p)
    return complex(x1, x2), complex(x3, x4)


def defining_function(p, space: SpaceKind) -> float:
    """|z|^2 + |w|^2 on S^3, |z|^2 - |w|^2 on Sigma^3."""
    x1, x2, x3, x4 = as_point(p)
    return x1 * x1 + x2 * x2 + space.sign * (x3 * x3 + x4 * x4)


def on_manifold(p, space: SpaceKind, tol: float = MANIFOLD_TOL) -> bool:
    return abs(defining_function(p, space) - 1.0) <= tol


def require_on_manifold(p, space: SpaceKind) -> np.ndarray:
    p = as_point(p)
    if not on_manifold(p, space):
        raise DomainError(
            f"point {p.tolist()} is not on {space.value} "
            f"(defining function {defining_function(p, space)!r})"
        )
    return p


def is_tangent(p, v, space: SpaceKind, tol: float = 1e-12) -> bool:
    """First-order tangency: the differential of the defining function vanishes on v."""
    x = as_point(p)
    u = as_point(v)
    d = x[0] * u[0] + x[1] * u[1] + space.sign * (x[2] * u[2] + x[3] * u[3])
    return abs(d) <= tol


def group_mul(p, q, space: SpaceKind) -> np.ndarray:
    """Group product. Defined (and R-linear in ``q``) on all of C^2."""
    return np.array(_kernels.mul(space.sign, as_point(p), as_point(q)))


def group_inv(p, space: SpaceKind) -> np.ndarray:
    p = require_on_manifold(p, space)
    return np.array([p[0], -p[1], -p[2], -p[3]])


def translate_to_identity(p, v, space: SpaceKind) -> np.ndarray:
    """p^{-1} v for an ambient vector v at p."""
    return np.array(_kernels.pullback(space.sign, as_point(p), as_point(v)))


def frame_at(p, params, space: SpaceKind) -> FrameVectors:
    """Left-invariant frame (X, Y, Z) and normal N at ``p``.

    ``params`` is a :class:`berger.metric.BergerParams` (anything with
    ``lam``, ``mu``, ``nu`` attributes).
    """
    p = require_on_manifold(p, space)
    lam, mu, nu = params.lam, params.mu, params.nu
    if not (lam > 0 and mu > 0 and nu > 0):
        raise DomainError(f"Berger parameters must be positive, got {(lam, mu, nu)}")
    return FrameVectors(
        base=p,
        X=group_mul(p, E_X, space) / lam,
        Y=group_mul(p, E_Y, space) / mu,
        Z=group_mul(p, E_Z, space) / nu,
        N=group_mul(p, E_N, space),
    )


def euclidean_ip(a, b) -> float:
    """Standard scalar product Re(z1 conj(z2) + w1 conj(w2)) on R^4."""
    return float(np.dot(as_point(a), as_point(b)))


def random_point(space: SpaceKind, rng: np.random.Generator) -> np.ndarray:
    """A random point of the group (Gaussian direction on S^3; hyperbolic chart on Sigma^3)."""
    if space is SpaceKind.S3:
        v = rng.standard_normal(4)
        return v / np.linalg.norm(v)
    t = rng.uniform(0.0, 1.5)
    a, b = rng.uniform(-np.pi, np.pi, 2)
    return from_complex(np.cosh(t) * np.exp(1j * a), np.sinh(t) * np.exp(1j * b))
