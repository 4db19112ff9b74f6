"""Torus families in S^3 and Sigma^3, their fundamental forms, mean
curvature, and the constant-mean-curvature solver.

The tori are

    S^3:      (cos t e^{ia}, sin t e^{ib}),    0 < t < pi/2
    Sigma^3:  (cosh t e^{ia}, sinh t e^{ib}),  t > 0

The second fundamental form of d/da is obtained by orthogonal decomposition
of the flat second derivative against span(d/da, d/db) and the normal N_p,
using the Berger metric of the model. The projection solves the 2x2 Gram
system of the induced form directly, which keeps it valid when the induced
metric is indefinite (Lorentzian cases). The trace is then
((G - E) / (EG - F^2)) * B(d/da, d/da), because B(d/db, d/db) = -B(d/da, d/da)
and the mixed term vanishes.
"""
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import optimize

from . import _kernels
from .ambient import SpaceKind
from .errors import (
    DegenerateInducedMetric,
    DegenerateTorus,
    DomainError,
    HypothesisViolated,
    IndefiniteInducedMetric,
    NoSolution,
)
from .metric import ModelSpec

MINIMAL_TOL = 1e-12
CMC_RESIDUAL_TOL = 1e-10
MU_NU_TOL = 1e-14
DET_CUTOFF = _kernels.DET_CUTOFF


@dataclass(frozen=True)
class TorusPoint:
    theta: float
    alpha: float = 0.0
    beta: float = 0.0

    def validate(self, space: SpaceKind) -> "TorusPoint":
        t = self.theta
        if space is SpaceKind.S3:
            if not 0.0 < t < math.pi / 2:
                raise DegenerateTorus(
                    f"theta={t!r} outside (0, pi/2); the endpoints are great circles"
                )
        elif not t > 0.0:
            raise DegenerateTorus(f"theta={t!r} must be positive; theta=0 is a circle")
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise DomainError("alpha and beta must be finite")
        return self


class Partials(NamedTuple):
    d_alpha: np.ndarray
    d_beta: np.ndarray
    d_theta: np.ndarray


class FrameComponents(NamedTuple):
    """Coefficients on X_p, Y_p, Z_p and N_p."""

    x: float
    y: float
    z: float
    n: float = 0.0


@dataclass(frozen=True)
class FundamentalForm:
    E: float
    F: float
    G: float

    @property
    def det(self) -> float:
        return self.E * self.G - self.F * self.F


@dataclass(frozen=True)
class SurfaceGeometry:
    form: FundamentalForm
    b_alpha: FrameComponents
    b_beta: FrameComponents
    trace_b: FrameComponents
    h: FrameComponents
    h_norm: float
    minimal: bool


@dataclass(frozen=True)
class CmcSolution:
    thetas: tuple
    residuals: tuple = ()


def _radii(space: SpaceKind, theta: float):
    if space is SpaceKind.S3:
        return math.cos(theta), math.sin(theta)
    return math.cosh(theta), math.sinh(theta)


def embed(space: SpaceKind, tp: TorusPoint) -> np.ndarray:
    tp.validate(space)
    return np.array(_kernels.embed(space.sign, tp.theta, tp.alpha, tp.beta))


def partials(space: SpaceKind, tp: TorusPoint) -> Partials:
    tp.validate(space)
    da, db, dt, _, _ = _kernels.tangents(space.sign, tp.theta, tp.alpha, tp.beta)
    return Partials(np.array(da), np.array(db), np.array(dt))


def second_partials(space: SpaceKind, tp: TorusPoint):
    """Flat second derivatives (d^2/da^2, d^2/db^2); the mixed one is zero."""
    tp.validate(space)
    _, _, _, dda, ddb = _kernels.tangents(space.sign, tp.theta, tp.alpha, tp.beta)
    return np.array(dda), np.array(ddb)


def _mixing(spec: ModelSpec, tp: TorusPoint):
    """(eps2 mu^2 sin^2(a+b) + eps3 nu^2 cos^2(a+b), eps1 lam^2)."""
    w1, w2, w3 = spec.weights
    s = math.sin(tp.alpha + tp.beta)
    c = math.cos(tp.alpha + tp.beta)
    return w2 * s * s + w3 * c * c, w1


def first_fundamental_form(spec: ModelSpec, tp: TorusPoint) -> FundamentalForm:
    """Closed-form (E, F, G) of the torus under the model's metric."""
    tp.validate(spec.space)
    D, L = _mixing(spec, tp)
    r, s = _radii(spec.space, tp.theta)
    r2, s2 = r * r, s * s
    E = r2 * (L * r2 + s2 * D)
    G = s2 * (L * s2 + r2 * D)
    if spec.space is SpaceKind.S3:
        F = r2 * s2 * (L - D)
    else:
        F = -r2 * s2 * (L + D)
    return FundamentalForm(E, F, G)


def induced_form(spec: ModelSpec, tp: TorusPoint) -> FundamentalForm:
    """(E, F, G) by evaluating the metric on the coordinate partials."""
    p = embed(spec.space, tp)
    d = partials(spec.space, tp)
    args = (spec.space.sign, spec.signature.as_tuple(), spec.params.as_tuple(), p)
    return FundamentalForm(
        _kernels.inner(*args, d.d_alpha, d.d_alpha),
        _kernels.inner(*args, d.d_alpha, d.d_beta),
        _kernels.inner(*args, d.d_beta, d.d_beta),
    )


def gram_schmidt_basis(form: FundamentalForm):
    """Coefficients (f1, f2, f3) with V1 = f1 d_a, V2 = f2 d_a + f3 d_b orthonormal.

    Only defined for a positive-definite induced metric.
    """
    E, F, det = form.E, form.F, form.det
    if not (E > 0 and det > 0):
        raise IndefiniteInducedMetric(
            f"Gram-Schmidt needs E > 0 and EG - F^2 > 0, got E={E!r}, EG-F^2={det!r}"
        )
    return 1.0 / math.sqrt(E), -F / math.sqrt(E * det), math.sqrt(E) / math.sqrt(det)


def _pipeline(spec: ModelSpec, tp: TorusPoint):
    tp.validate(spec.space)
    sign = spec.space.sign
    p = _kernels.embed(sign, tp.theta, tp.alpha, tp.beta)
    da, db, _, dda, ddb = _kernels.tangents(sign, tp.theta, tp.alpha, tp.beta)
    res = _kernels.surface_point(
        sign, spec.signature.as_tuple(), spec.params.as_tuple(), p, da, db, dda, ddb
    )
    if not abs(res[3]) >= DET_CUTOFF:
        raise DegenerateInducedMetric(
            f"|EG - F^2| = {abs(res[3])!r} below {DET_CUTOFF} at {tp}"
        )
    return res


def second_ff_alpha(spec: ModelSpec, tp: TorusPoint) -> FrameComponents:
    """B(d_a, d_a) in frame components; x and n vanish up to rounding."""
    return FrameComponents(*_pipeline(spec, tp)[4:8])


def second_ff_beta(spec: ModelSpec, tp: TorusPoint) -> FrameComponents:
    return FrameComponents(*_pipeline(spec, tp)[12:16])


def closed_form_second_ff_alpha(spec: ModelSpec, tp: TorusPoint):
    """(b_Y, b_Z) of B(d_a, d_a) in closed form.

    With D = eps2 mu^2 sin^2(a+b) + eps3 nu^2 cos^2(a+b) and r, s the two
    radii of the torus::

        b_Y = -r s mu (eps3 nu^2) cos(a+b) / D
        b_Z =  r s nu (eps2 mu^2) sin(a+b) / D
    """
    tp.validate(spec.space)
    D, _ = _mixing(spec, tp)
    _, w2, w3 = spec.weights
    r, s = _radii(spec.space, tp.theta)
    mu, nu = spec.params.mu, spec.params.nu
    ab = tp.alpha + tp.beta
    return (-r * s * mu * w3 * math.cos(ab) / D, r * s * nu * w2 * math.sin(ab) / D)


def closed_form_h_norm(spec: ModelSpec, tp: TorusPoint) -> float:
    """mu nu / (|tan 2t| |D|^{3/2}) on S^3, with tanh on Sigma^3."""
    tp.validate(spec.space)
    D, _ = _mixing(spec, tp)
    mu, nu = spec.params.mu, spec.params.nu
    t2 = 2.0 * tp.theta
    if spec.space is SpaceKind.S3:
        cot = abs(math.cos(t2)) / abs(math.sin(t2))
    else:
        cot = 1.0 / math.tanh(t2)
    return mu * nu * cot / abs(D) ** 1.5


def geometry_from_columns(res) -> SurfaceGeometry:
    """Build a SurfaceGeometry from the 16 kernel output columns."""
    h = FrameComponents(res[8], res[9], res[10])
    h_norm = res[11]
    return SurfaceGeometry(
        form=FundamentalForm(res[0], res[1], res[2]),
        b_alpha=FrameComponents(*res[4:8]),
        b_beta=FrameComponents(*res[12:16]),
        trace_b=FrameComponents(2.0 * h.x, 2.0 * h.y, 2.0 * h.z),
        h=h,
        h_norm=h_norm,
        minimal=h_norm <= MINIMAL_TOL,
    )


def mean_curvature(spec: ModelSpec, tp: TorusPoint) -> SurfaceGeometry:
    return geometry_from_columns(_pipeline(spec, tp))


# a few points of the torus; with mu = nu the mean curvature is the same at all of them
_PROBES = ((0.0, 0.0), (0.7, -0.3), (2.1, 1.4))


def _h_at(spec: ModelSpec, theta: float, alpha: float = 0.0, beta: float = 0.0) -> float:
    return mean_curvature(spec, TorusPoint(theta, alpha, beta)).h_norm


def _residuals(spec, thetas, C):
    out = []
    for t in thetas:
        out.append(max(abs(_h_at(spec, t, a, b) - C) for a, b in _PROBES))
    return tuple(out)


def _bisect_s3(spec: ModelSpec, C: float):
    lo, hi = 1e-6, math.pi / 2 - 1e-6
    gap = 1e-6
    if C == 0.0:
        # the signed trace factor (G - E) / (EG - F^2) changes sign at the minimal torus
        def signed(t):
            form = induced_form(spec, TorusPoint(t))
            return (form.G - form.E) / form.det

        return [optimize.bisect(signed, lo, hi, xtol=1e-15)]
    f = lambda t: _h_at(spec, t) - C  # noqa: E731
    roots = []
    for a, b in ((lo, math.pi / 4 - gap), (math.pi / 4 + gap, hi)):
        if f(a) * f(b) > 0:
            raise NoSolution(f"no sign change of |H| - C on [{a}, {b}]")
        roots.append(optimize.bisect(f, a, b, xtol=1e-15))
    return roots


def _bisect_sigma3(spec: ModelSpec, C: float):
    f = lambda t: _h_at(spec, t) - C  # noqa: E731
    lo, hi = 1e-6, 1.0
    while f(hi) > 0:
        hi *= 2.0
        if hi > 64.0:
            raise NoSolution(f"|H| stays above C={C!r} on (0, 64]")
    return [optimize.bisect(f, lo, hi, xtol=1e-15)]


def cmc_solve(spec: ModelSpec, C: float, method: str = "closed-form") -> CmcSolution:
    """All tori of the family with |H| = C, for mu = nu.

    ``method="bisection"`` brackets and bisects |H(t)| - C from the
    decomposition pipeline instead of using the closed-form angles.
    """
    mu, nu = spec.params.mu, spec.params.nu
    if abs(mu - nu) > MU_NU_TOL:
        raise HypothesisViolated(f"constant mean curvature needs mu == nu, got {mu!r}, {nu!r}")
    if spec.signature.eps2 != spec.signature.eps3:
        # D = mu^2 (eps2 sin^2 + eps3 cos^2) then varies along the torus
        raise HypothesisViolated("constant mean curvature needs eps2 == eps3")
    C = float(C)
    if not (C >= 0.0 and math.isfinite(C)):
        raise DomainError(f"target mean curvature must be finite and >= 0, got {C!r}")
    if method not in ("closed-form", "bisection"):
        raise ValueError(f"unknown method {method!r}")

    if spec.space is SpaceKind.S3:
        if method == "bisection":
            thetas = _bisect_s3(spec, C)
        elif C == 0.0:
            thetas = [math.pi / 4]
        else:
            t = 0.5 * math.atan(1.0 / (C * mu))
            thetas = [t, math.pi / 2 - t]
    else:
        if not C * mu > 1.0:
            raise NoSolution(
                f"tori in Sigma^3 have |H| > 1/mu = {1.0 / mu!r}; no solution for C={C!r}"
            )
        if method == "bisection":
            thetas = _bisect_sigma3(spec, C)
        else:
            thetas = [0.5 * math.atanh(1.0 / (C * mu))]

    thetas = sorted(thetas)
    residuals = _residuals(spec, thetas, C)
    tol = CMC_RESIDUAL_TOL * max(1.0, C)
    for t, r in zip(thetas, residuals):
        if not r <= tol:
            raise ArithmeticError(f"residual {r!r} at theta={t!r} exceeds {tol!r}")
    return CmcSolution(tuple(thetas), residuals)
