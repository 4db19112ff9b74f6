"""Levi-Civita connection, curvature and curvature-sign regions on the frame.

Everything here lives in frame components: a left-invariant metric on a Lie
group is determined by its structure constants and the (constant) frame
signature, so the Koszul formula reduces to algebra on 3x3x3 tables.

Tables are ``numpy`` arrays of shape (3, 3, 3) indexed ``[i, j, k]`` over the
frame order X, Y, Z:

* structure constants: ``[E_i, E_j] = sum_k c[i, j, k] E_k``
* connection: ``nabla_{E_i} E_j = sum_k gamma[i, j, k] E_k``
"""
import enum
import math

import numpy as np

from . import _kernels
from .ambient import SpaceKind
from .errors import UnsupportedSignature
from .metric import LORENTZIAN, RIEMANNIAN, ModelSpec, Signature

X, Y, Z = 0, 1, 2
FRAME_NAMES = "XYZ"
BOUNDARY_TOL = 1e-10


class Plane(enum.Enum):
    XY = (X, Y)
    XZ = (X, Z)
    YZ = (Y, Z)

    @property
    def indices(self):
        return self.value


class Region(enum.Enum):
    IN_REGION = "InRegion"
    ON_BOUNDARY = "OnBoundary"
    OUTSIDE = "Outside"


def _table(flat) -> np.ndarray:
    return np.asarray(flat, dtype=float).reshape(3, 3, 3)


def structure_constants(spec: ModelSpec) -> np.ndarray:
    lam, mu, nu = spec.params.as_tuple()
    return _table(_kernels.structure_constants(spec.space.sign, lam, mu, nu))


def koszul_connection(sc, sig: Signature) -> np.ndarray:
    """Solve the Koszul formula for left-invariant fields.

    With the derivative terms gone, 2 g(nabla_i E_j, E_k) is
    ``g(E_k,[E_i,E_j]) + g(E_j,[E_k,E_i]) - g(E_i,[E_j,E_k])`` and the frame
    coefficient picks up one more factor eps_k.
    """
    sc = np.asarray(sc, dtype=float)
    if not np.array_equal(sc, -sc.transpose(1, 0, 2)):
        raise ValueError("structure constants must be antisymmetric in the first two indices")
    return _table(_kernels.koszul(sc.ravel().tolist(), sig.as_tuple()))


# Closed-form connection tables: (i, j) -> (k, sign, (a, b, c)) meaning
# nabla_{E_i} E_j = sign * (a lam^2 + b mu^2 + c nu^2) / (lam mu nu) * E_k
_CONNECTION_TABLES = {
    (SpaceKind.S3, RIEMANNIAN): {
        (X, Y): (Z, 1, (-1, 1, 1)),
        (X, Z): (Y, -1, (-1, 1, 1)),
        (Y, X): (Z, 1, (-1, 1, -1)),
        (Y, Z): (X, -1, (-1, 1, -1)),
        (Z, X): (Y, 1, (1, 1, -1)),
        (Z, Y): (X, -1, (1, 1, -1)),
    },
    (SpaceKind.S3, LORENTZIAN): {
        (X, Y): (Z, 1, (1, 1, 1)),
        (X, Z): (Y, -1, (1, 1, 1)),
        (Y, X): (Z, 1, (1, 1, -1)),
        (Y, Z): (X, 1, (1, 1, -1)),
        (Z, X): (Y, 1, (-1, 1, -1)),
        (Z, Y): (X, 1, (-1, 1, -1)),
    },
    (SpaceKind.SIGMA3, RIEMANNIAN): {
        (X, Y): (Z, 1, (1, 1, 1)),
        (X, Z): (Y, -1, (1, 1, 1)),
        (Y, X): (Z, 1, (1, 1, -1)),
        (Y, Z): (X, -1, (1, 1, -1)),
        (Z, X): (Y, 1, (-1, 1, -1)),
        (Z, Y): (X, -1, (-1, 1, -1)),
    },
    (SpaceKind.SIGMA3, LORENTZIAN): {
        (X, Y): (Z, 1, (-1, 1, 1)),
        (X, Z): (Y, -1, (-1, 1, 1)),
        (Y, X): (Z, 1, (-1, 1, -1)),
        (Y, Z): (X, -1, (1, -1, 1)),
        (Z, X): (Y, 1, (1, 1, -1)),
        (Z, Y): (X, 1, (1, 1, -1)),
    },
}


def _require_tabulated(spec: ModelSpec):
    key = (spec.space, spec.signature)
    if key not in _CONNECTION_TABLES:
        raise UnsupportedSignature(
            f"no closed form tabulated for signature {spec.signature} "
            "(only +,+,+ and -,+,+ are)"
        )
    return key


def closed_form_connection(spec: ModelSpec) -> np.ndarray:
    """Connection table read off the closed-form tables (no Koszul solve)."""
    key = _require_tabulated(spec)
    lam, mu, nu = spec.params.as_tuple()
    L, M, N = lam * lam, mu * mu, nu * nu
    denom = lam * mu * nu
    gamma = np.zeros((3, 3, 3))
    for (i, j), (k, sign, (a, b, c)) in _CONNECTION_TABLES[key].items():
        gamma[i, j, k] = sign * (a * L + b * M + c * N) / denom
    return gamma


def koszul_for(spec: ModelSpec) -> np.ndarray:
    return koszul_connection(structure_constants(spec), spec.signature)


def curvature_numerator(spec: ModelSpec, plane: Plane) -> float:
    """g(R(E_i, E_j) E_j, E_i) for the plane's frame vectors, via Koszul."""
    lam, mu, nu = spec.params.as_tuple()
    c = _kernels.structure_constants(spec.space.sign, lam, mu, nu)
    eps = spec.signature.as_tuple()
    gamma = _kernels.koszul(c, eps)
    i, j = plane.indices
    return _kernels.curvature_numerator(gamma, c, eps, i, j)


def curvature_numerator_from_tables(gamma, sc, sig: Signature, i: int, j: int) -> float:
    return _kernels.curvature_numerator(
        np.asarray(gamma, dtype=float).ravel().tolist(),
        np.asarray(sc, dtype=float).ravel().tolist(),
        sig.as_tuple(),
        i,
        j,
    )


def sectional_curvature(spec: ModelSpec, plane: Plane) -> float:
    """Numerator divided by the Gram determinant eps_i eps_j of the plane."""
    eps = spec.signature.as_tuple()
    i, j = plane.indices
    return curvature_numerator(spec, plane) / (eps[i] * eps[j])


def _closed_forms(L, M, N, as_printed):
    s3g = {
        Plane.XY: (L - M + N) ** 2 + 4 * N * (M - N),
        Plane.XZ: (L + M - N) ** 2 - 4 * M * (M - N),
        Plane.YZ: (L + M + N) ** 2 - 4 * (L * L + M * N),
    }
    s3h = {
        Plane.XY: (L + M - N) ** 2 + 4 * N * (M - N),
        Plane.XZ: (L - M + N) ** 2 - 4 * M * (M - N),
        Plane.YZ: (L + M + N) ** 2 + 2 * (L * L - M * M - N * N),
    }
    if as_printed:
        # quartic/quadratic mix exactly as typeset
        sigma_g_yz = -((L + M + N) ** 2 + 2 * (L * L - M - N))
    else:
        sigma_g_yz = -((L + M + N) ** 2 + 2 * (L * L - M * M - N * N))
    sigma_g = {Plane.XY: s3h[Plane.XY], Plane.XZ: s3h[Plane.XZ], Plane.YZ: sigma_g_yz}
    sigma_h = {
        Plane.XY: s3g[Plane.XY],
        Plane.XZ: s3g[Plane.XZ],
        Plane.YZ: -((L + M + N) ** 2 - 4 * (L * L + M * N)),
    }
    return {
        (SpaceKind.S3, RIEMANNIAN): s3g,
        (SpaceKind.S3, LORENTZIAN): s3h,
        (SpaceKind.SIGMA3, RIEMANNIAN): sigma_g,
        (SpaceKind.SIGMA3, LORENTZIAN): sigma_h,
    }


def closed_form_curvature(spec: ModelSpec, plane: Plane, as_printed: bool = False) -> float:
    """Closed-form g(R(E_i,E_j)E_j,E_i) for the four tabulated cases.

    ``as_printed=True`` returns the Sigma^3 Riemannian K(Y, Z) with the
    typeset ``lam^4 - mu^2 - nu^2`` term; the default uses
    ``lam^4 - mu^4 - nu^4``, which is what the Koszul computation gives.
    All other entries are identical in both modes.
    """
    key = _require_tabulated(spec)
    lam, mu, nu = spec.params.as_tuple()
    forms = _closed_forms(lam * lam, mu * mu, nu * nu, as_printed)
    return forms[key][plane] / (lam * mu * nu) ** 2


def _region_rule(spec: ModelSpec, plane: Plane):
    """(hypothesis holds, bound on lam^2, 'le' or 'ge') for the sign-region inequality."""
    key = _require_tabulated(spec)
    mu, nu = spec.params.mu, spec.params.nu
    M, N = mu * mu, nu * nu
    if plane is Plane.XY:
        ok = mu < nu
        root = 2 * nu * math.sqrt(N - M) if ok else math.nan
        # S3/g and Sigma3/h share one inequality, S3/h and Sigma3/g the other
        if key in ((SpaceKind.S3, RIEMANNIAN), (SpaceKind.SIGMA3, LORENTZIAN)):
            return ok, root + M - N, "le"
        return ok, root - M + N, "le"
    if plane is Plane.XZ:
        ok = mu > nu
        root = 2 * mu * math.sqrt(M - N) if ok else math.nan
        if key in ((SpaceKind.S3, RIEMANNIAN), (SpaceKind.SIGMA3, LORENTZIAN)):
            return ok, root + N - M, "le"
        return ok, root - N + M, "le"
    q = 2 * math.sqrt(M * M - M * N + N * N)
    return {
        (SpaceKind.S3, RIEMANNIAN): (True, (q + M + N) / 3, "ge"),
        (SpaceKind.S3, LORENTZIAN): (True, (q - M - N) / 3, "le"),
        (SpaceKind.SIGMA3, RIEMANNIAN): (True, (q - M - N) / 3, "ge"),
        (SpaceKind.SIGMA3, LORENTZIAN): (True, (q + M + N) / 3, "le"),
    }[key]


def boundary_lambda_squared(spec: ModelSpec, plane: Plane):
    """lam^2 on the boundary of the nonpositive-curvature region, or None
    when the region's hypothesis on (mu, nu) fails or the bound is not positive."""
    ok, bound, _ = _region_rule(spec, plane)
    if not ok or not bound > 0:
        return None
    return bound


def sign_region_check(spec: ModelSpec, plane: Plane, tol: float = BOUNDARY_TOL) -> Region:
    """Classify lam^2 against the inequality describing where K(plane) <= 0.

    IN_REGION corresponds to K < 0, OUTSIDE to K > 0, ON_BOUNDARY to K = 0.
    """
    ok, bound, direction = _region_rule(spec, plane)
    if not ok:
        return Region.OUTSIDE
    L = spec.params.lam ** 2
    if abs(L - bound) <= tol:
        return Region.ON_BOUNDARY
    inside = L < bound if direction == "le" else L > bound
    return Region.IN_REGION if inside else Region.OUTSIDE
