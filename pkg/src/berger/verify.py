"""Finite-difference oracle and the cross-check suite.

The FD side differentiates the torus embedding numerically and runs the
orthogonal decomposition on those derivatives, so nothing in it relies on
the closed-form fundamental forms. ``run_suite`` compares every closed form
in the package against an independent computation and records the worst
deviation per check.

Samples come from a counter-based generator keyed by (seed, check name), so
each check sees the same inputs whatever order or thread it runs in.
"""
import math
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import _json, _kernels
from .ambient import SpaceKind
from .connection import (
    Plane,
    Region,
    boundary_lambda_squared,
    closed_form_connection,
    closed_form_curvature,
    sectional_curvature,
    sign_region_check,
)
from .errors import DegenerateTorus, NoSolution
from .metric import LORENTZIAN, RIEMANNIAN, BergerParams, ModelSpec, Signature
from .torus import (
    SurfaceGeometry,
    TorusPoint,
    closed_form_h_norm,
    closed_form_second_ff_alpha,
    cmc_solve,
    first_fundamental_form,
    geometry_from_columns,
    gram_schmidt_basis,
    induced_form,
    mean_curvature,
)

PARAM_RANGE = (0.5, 2.0)
# Sigma^3 tori grow like e^{2t}; capping t keeps absolute tolerances meaningful
THETA_RANGE = {SpaceKind.S3: (0.1, math.pi / 2 - 0.1), SpaceKind.SIGMA3: (0.1, 1.4)}
MAX_STEP = 1e-2

TABULATED_CASES = tuple(
    ModelSpec(space, BergerParams(), sig)
    for space in (SpaceKind.S3, SpaceKind.SIGMA3)
    for sig in (RIEMANNIAN, LORENTZIAN)
)


@dataclass(frozen=True)
class FdConfig:
    step: float = 1e-5
    samples: int = 1000
    seed: int = 42
    # step of the extrapolated second differences in the FD mean-curvature pipeline
    curvature_step: float = 1e-3

    def __post_init__(self):
        if not (0.0 < self.step <= MAX_STEP):
            raise ValueError(f"step must be in (0, {MAX_STEP}], got {self.step!r}")
        if not (0.0 < self.curvature_step <= 0.1):
            raise ValueError(f"curvature_step must be in (0, 0.1], got {self.curvature_step!r}")
        if int(self.samples) != self.samples or self.samples < 1:
            raise ValueError(f"samples must be a positive integer, got {self.samples!r}")
        if int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")


_DIRECTIONS = {"alpha": 0, "beta": 1, "theta": 2}


def _shifted(tp: TorusPoint, which: str, h: float) -> TorusPoint:
    if which == "alpha":
        return TorusPoint(tp.theta, tp.alpha + h, tp.beta)
    if which == "beta":
        return TorusPoint(tp.theta, tp.alpha, tp.beta + h)
    if which == "theta":
        return TorusPoint(tp.theta + h, tp.alpha, tp.beta)
    raise ValueError(f"which must be one of {sorted(_DIRECTIONS)}, got {which!r}")


def _embed(space: SpaceKind, tp: TorusPoint) -> np.ndarray:
    tp.validate(space)
    return np.array(_kernels.embed(space.sign, tp.theta, tp.alpha, tp.beta))


def fd_partial(space: SpaceKind, tp: TorusPoint, which: str, cfg: FdConfig) -> np.ndarray:
    """Central difference of the embedding in one coordinate."""
    h = cfg.step
    tp.validate(space)
    plus, minus = _shifted(tp, which, h), _shifted(tp, which, -h)
    try:
        return (_embed(space, plus) - _embed(space, minus)) / (2.0 * h)
    except DegenerateTorus as exc:
        raise DegenerateTorus(f"theta={tp.theta!r} is within one step of the domain edge") from exc


def fd_second_partial_alpha(space: SpaceKind, tp: TorusPoint, cfg: FdConfig) -> np.ndarray:
    h = cfg.step
    p0 = _embed(space, tp)
    return (
        _embed(space, _shifted(tp, "alpha", h)) - 2.0 * p0 + _embed(space, _shifted(tp, "alpha", -h))
    ) / (h * h)


def fd_mixed_partial(space: SpaceKind, tp: TorusPoint, cfg: FdConfig) -> np.ndarray:
    h = cfg.step
    e = lambda da, db: _embed(space, TorusPoint(tp.theta, tp.alpha + da, tp.beta + db))  # noqa: E731
    return (e(h, h) - e(h, -h) - e(-h, h) + e(-h, -h)) / (4.0 * h * h)


def _surface_rows(spec: ModelSpec, params, points, fd_step=0.0, curv_step=0.0) -> np.ndarray:
    params = np.ascontiguousarray(params, dtype=float)
    points = np.ascontiguousarray(points, dtype=float)
    out = np.empty((len(params), 16))
    _kernels.surface_batch(
        spec.space.sign, spec.signature.as_tuple(), params, points, fd_step, curv_step, out
    )
    return out


def fd_mean_curvature(spec: ModelSpec, tp: TorusPoint, cfg: FdConfig) -> SurfaceGeometry:
    """Mean curvature from numerically differentiated embeddings."""
    tp.validate(spec.space)
    row = _surface_rows(
        spec,
        [spec.params.as_tuple()],
        [(tp.theta, tp.alpha, tp.beta)],
        cfg.step,
        cfg.curvature_step,
    )[0]
    return geometry_from_columns(tuple(float(v) for v in row))


@dataclass(frozen=True)
class CheckResult:
    name: str
    cases: int
    max_abs_deviation: float
    tolerance: float
    passed: bool
    expected_fail: bool = False


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple
    config: FdConfig = field(default_factory=FdConfig)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks if not c.expected_fail)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed and not c.expected_fail]

    def to_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "ok": self.ok,
            "checks": [asdict(c) for c in self.checks],
        }

    def to_json(self) -> str:
        return _json.dumps(self.to_dict())


# ---------------------------------------------------------------- sampling


def check_rng(seed: int, name: str) -> np.random.Generator:
    key = (zlib.crc32(name.encode()) << 64) | int(seed)
    return np.random.Generator(np.random.Philox(key=key))


def _params(rng, n):
    return rng.uniform(*PARAM_RANGE, size=(n, 3))


def _points(rng, space, n):
    t = rng.uniform(*THETA_RANGE[space], size=n)
    ab = rng.uniform(-math.pi, math.pi, size=(n, 2))
    return np.column_stack([t, ab])


def _spec(base: ModelSpec, row) -> ModelSpec:
    return ModelSpec(base.space, BergerParams(*(float(v) for v in row)), base.signature)


def _tp(row) -> TorusPoint:
    return TorusPoint(float(row[0]), float(row[1]), float(row[2]))


def _koszul_rows(spec: ModelSpec, params):
    params = np.ascontiguousarray(params, dtype=float)
    gamma = np.empty((len(params), 27))
    num = np.empty((len(params), 3))
    _kernels.connection_batch(spec.space.sign, spec.signature.as_tuple(), params, gamma, num)
    return gamma.reshape(-1, 3, 3, 3), num


def _structure_rows(spec: ModelSpec, params):
    return np.array(
        [_kernels.structure_constants(spec.space.sign, *map(float, row)) for row in params]
    ).reshape(-1, 3, 3, 3)


def _max(values) -> float:
    arr = np.abs(np.asarray(values, dtype=float))
    if arr.size == 0:
        return 0.0
    if not np.all(np.isfinite(arr)):
        return math.inf
    return float(arr.max())


# ------------------------------------------------------------------ checks
# each returns (cases, max_abs_deviation); rng is private to the check


def _connection_oracle(spec, cfg, rng):
    params = _params(rng, cfg.samples)
    gamma, _ = _koszul_rows(spec, params)
    closed = np.array([closed_form_connection(_spec(spec, row)) for row in params])
    return len(params), _max(gamma - closed)


def _torsion_free(spec, cfg, rng):
    params = _params(rng, cfg.samples)
    gamma, _ = _koszul_rows(spec, params)
    c = _structure_rows(spec, params)
    return len(params), _max(gamma - gamma.transpose(0, 2, 1, 3) - c)


def _metric_compat(spec, cfg, rng):
    params = _params(rng, cfg.samples)
    gamma, _ = _koszul_rows(spec, params)
    eps = np.array(spec.signature.as_tuple(), dtype=float)
    # eps_k gamma[i, j, k] + eps_j gamma[i, k, j]
    a = gamma * eps[None, None, None, :]
    return len(params), _max(a + a.transpose(0, 1, 3, 2))


def _curvature_swap(spec, cfg, rng):
    params = _params(rng, cfg.samples)
    gamma, num = _koszul_rows(spec, params)
    c = _structure_rows(spec, params)
    eps = spec.signature.as_tuple()
    dev = []
    for g, cc, n in zip(gamma, c, num):
        gl, cl = g.ravel().tolist(), cc.ravel().tolist()
        for col, (i, j) in enumerate(p.indices for p in Plane):
            dev.append(n[col] - _kernels.curvature_numerator(gl, cl, eps, j, i))
    return len(params), _max(dev)


def _curvature_closed_form(plane, as_printed=False):
    def check(spec, cfg, rng):
        params = _params(rng, cfg.samples)
        _, num = _koszul_rows(spec, params)
        col = list(Plane).index(plane)
        closed = [closed_form_curvature(_spec(spec, row), plane, as_printed) for row in params]
        return len(params), _max(num[:, col] - np.array(closed))

    return check


def _round_sphere(spec, cfg, rng):
    unit = ModelSpec(SpaceKind.S3)
    return 3, _max([sectional_curvature(unit, p) - 1.0 for p in Plane])


def _boundary_params(spec, plane, rng):
    while True:
        mu, nu = rng.uniform(*PARAM_RANGE, size=2)
        if plane is Plane.XY and mu > nu:
            mu, nu = nu, mu
        elif plane is Plane.XZ and mu < nu:
            mu, nu = nu, mu
        if mu == nu:
            continue
        bound = boundary_lambda_squared(spec.with_params(1.0, mu, nu), plane)
        # boundary lambda must land in the sampling box like every other parameter
        if bound is not None and PARAM_RANGE[0] <= math.sqrt(bound) <= PARAM_RANGE[1]:
            return spec.with_params(math.sqrt(bound), mu, nu)


def _sign_boundary(plane):
    def check(spec, cfg, rng):
        dev, n = [], cfg.samples
        col = list(Plane).index(plane)
        for _ in range(n):
            s = _boundary_params(spec, plane, rng)
            if sign_region_check(s, plane) is not Region.ON_BOUNDARY:
                dev.append(math.inf)
                continue
            _, num = _koszul_rows(s, [s.params.as_tuple()])
            dev.append(num[0, col])
        return n, _max(dev)

    return check


def _sign_interior(plane):
    """Disagreements between the region and the sign of K; the deviation is
    the largest |K| among disagreeing samples (0 when all agree)."""

    def check(spec, cfg, rng):
        params = _params(rng, cfg.samples)
        _, num = _koszul_rows(spec, params)
        col = list(Plane).index(plane)
        bad = [0.0]
        cases = 0
        for row, k in zip(params, num[:, col]):
            if abs(k) <= 1e-10:
                continue
            region = sign_region_check(_spec(spec, row), plane)
            if region is Region.ON_BOUNDARY:
                continue
            cases += 1
            if (region is Region.IN_REGION) != (k < 0):
                bad.append(k)
        return cases, _max(bad)

    return check


def _form_identities(spec, cfg, rng):
    params, points = _params(rng, cfg.samples), _points(rng, spec.space, cfg.samples)
    dev = []
    for row, pt in zip(params, points):
        s, tp = _spec(spec, row), _tp(pt)
        f = first_fundamental_form(s, tp)
        L = s.weights[0]
        if s.space is SpaceKind.S3:
            c2, s2 = math.cos(tp.theta) ** 2, math.sin(tp.theta) ** 2
            dev += [f.E + f.F - L * c2, f.G + f.F - L * s2, f.G - f.E - L * (s2 - c2)]
        else:
            c2, s2 = math.cosh(tp.theta) ** 2, math.sinh(tp.theta) ** 2
            dev += [f.E + f.F - L * c2, f.G + f.F + L * s2, f.G - f.E + L * (c2 + s2)]
    return len(params), _max(dev)


def _form_vs_metric(spec, cfg, rng):
    params, points = _params(rng, cfg.samples), _points(rng, spec.space, cfg.samples)
    dev = []
    for row, pt in zip(params, points):
        s, tp = _spec(spec, row), _tp(pt)
        a, b = first_fundamental_form(s, tp), induced_form(s, tp)
        dev += [a.E - b.E, a.F - b.F, a.G - b.G]
    return len(params), _max(dev)


def _gram_schmidt(spec, cfg, rng):
    params, points = _params(rng, cfg.samples), _points(rng, spec.space, cfg.samples)
    dev, cases = [], 0
    for row, pt in zip(params, points):
        s, tp = _spec(spec, row), _tp(pt)
        form = induced_form(s, tp)
        if not (form.E > 0 and form.det > 0):
            continue
        cases += 1
        f1, f2, f3 = gram_schmidt_basis(form)
        E, F, G = form.E, form.F, form.G
        dev += [
            f1 * f1 * E - 1.0,
            f1 * (f2 * E + f3 * F),
            f2 * f2 * E + 2 * f2 * f3 * F + f3 * f3 * G - 1.0,
        ]
    return cases, _max(dev)


def _partials_fd(spec, cfg, rng):
    points = _points(rng, spec.space, cfg.samples)
    dev = []
    for pt in points:
        tp = _tp(pt)
        exact = _kernels.tangents(spec.space.sign, tp.theta, tp.alpha, tp.beta)
        for which, k in _DIRECTIONS.items():
            dev.append(_max(fd_partial(spec.space, tp, which, cfg) - np.array(exact[k])))
    return len(points), max(dev)


def _second_fd(spec, cfg, rng):
    points = _points(rng, spec.space, cfg.samples)
    dev = []
    for pt in points:
        tp = _tp(pt)
        exact = _kernels.tangents(spec.space.sign, tp.theta, tp.alpha, tp.beta)[3]
        dev.append(_max(fd_second_partial_alpha(spec.space, tp, cfg) - np.array(exact)))
    return len(points), max(dev)


def _mixed_fd(spec, cfg, rng):
    params, points = _params(rng, cfg.samples), _points(rng, spec.space, cfg.samples)
    dev = []
    sign, eps = spec.space.sign, spec.signature.as_tuple()
    for row, pt in zip(params, points):
        tp = _tp(pt)
        p = _kernels.embed(sign, tp.theta, tp.alpha, tp.beta)
        da, db, _, _, _ = _kernels.tangents(sign, tp.theta, tp.alpha, tp.beta)
        mixed = fd_mixed_partial(spec.space, tp, cfg).tolist()
        # feeding the mixed derivative through the pipeline returns its normal part
        res = _kernels.surface_point(sign, eps, tuple(row), p, da, db, mixed, mixed)
        dev.append(_max(res[4:8]))
    return len(points), max(dev)


class _Sweep:
    """Analytic and FD pipeline rows over one shared sample set."""

    def __init__(self, spec, cfg, rng, fd=False):
        self.params = _params(rng, cfg.samples)
        self.points = _points(rng, spec.space, cfg.samples)
        self.rows = _surface_rows(spec, self.params, self.points)
        self.fd = (
            _surface_rows(spec, self.params, self.points, cfg.step, cfg.curvature_step)
            if fd
            else None
        )


def _b_beta_antisym(spec, cfg, rng):
    sw = _Sweep(spec, cfg, rng)
    return len(sw.rows), _max(sw.rows[:, 12:16] + sw.rows[:, 4:8])


def _b_beta_antisym_fd(spec, cfg, rng):
    sw = _Sweep(spec, cfg, rng, fd=True)
    return len(sw.rows), _max(sw.fd[:, 12:16] + sw.fd[:, 4:8])


def _b_tangential(spec, cfg, rng):
    sw = _Sweep(spec, cfg, rng)
    return len(sw.rows), _max(sw.rows[:, [4, 7]])


def _b_closed_form(spec, cfg, rng):
    sw = _Sweep(spec, cfg, rng)
    closed = np.array(
        [closed_form_second_ff_alpha(_spec(spec, r), _tp(p)) for r, p in zip(sw.params, sw.points)]
    )
    return len(sw.rows), _max(sw.rows[:, 5:7] - closed)


def _closed_h(spec, sw):
    return np.array(
        [closed_form_h_norm(_spec(spec, r), _tp(p)) for r, p in zip(sw.params, sw.points)]
    )


def _h_closed_form(spec, cfg, rng):
    sw = _Sweep(spec, cfg, rng)
    return len(sw.rows), _max(sw.rows[:, 11] - _closed_h(spec, sw))


def _h_fd(spec, cfg, rng):
    sw = _Sweep(spec, cfg, rng, fd=True)
    return len(sw.rows), _max(sw.fd[:, 11] - _closed_h(spec, sw))


def _signature_invariance(spec, cfg, rng):
    e1, e2, e3 = spec.signature.as_tuple()
    # flipping eps1 swaps Riemannian and Lorentzian; H does not see the X direction
    other = spec.with_signature(Signature(-e1, e2, e3))
    sw = _Sweep(spec, cfg, rng)
    rows = _surface_rows(other, sw.params, sw.points)
    # h components and norm; trace B is 2h
    return len(rows), _max(sw.rows[:, 8:12] - rows[:, 8:12])


def _lambda_independence(spec, cfg, rng):
    sw = _Sweep(spec, cfg, rng)
    params = sw.params.copy()
    params[:, 0] = rng.uniform(*PARAM_RANGE, size=len(params))
    rows = _surface_rows(spec, params, sw.points)
    return len(rows), _max(sw.rows[:, 8:12] - rows[:, 8:12])


def _sigma3_lower_bound(spec, cfg, rng):
    params = _params(rng, cfg.samples)
    params[:, 2] = params[:, 1]
    points = _points(rng, spec.space, cfg.samples)
    rows = _surface_rows(spec, params, points)
    gap = 1.0 / params[:, 1] - rows[:, 11]
    # deviation is how far |H| falls to or below 1/mu
    return len(rows), _max(np.maximum(gap, 0.0))


def _clifford_minimal(spec, cfg, rng):
    params = _params(rng, cfg.samples)
    points = np.column_stack(
        [np.full(cfg.samples, math.pi / 4), rng.uniform(-math.pi, math.pi, size=(cfg.samples, 2))]
    )
    rows = _surface_rows(spec, params, points)
    return len(rows), _max(rows[:, 11])


def _cmc_round_trip(spec, cfg, rng):
    n = cfg.samples
    mus = rng.uniform(*PARAM_RANGE, size=n)
    lams = rng.uniform(*PARAM_RANGE, size=n)
    u = rng.uniform(0.05, 5.0, size=n)
    dev = []
    for k, (lam, mu, ui) in enumerate(zip(lams, mus, u)):
        s = spec.with_params(lam, mu, mu)
        if spec.space is SpaceKind.S3:
            C = 0.0 if k == 0 else ui
            expected = 1 if C == 0.0 else 2
        else:
            C = (1.0 + ui) / mu
            expected = 1
        sol = cmc_solve(s, C)
        if len(sol.thetas) != expected:
            dev.append(math.inf)
            continue
        for t in sol.thetas:
            dev.append(mean_curvature(s, TorusPoint(t, 0.3, -1.1)).h_norm - C)
    return n, _max(dev)


def _cmc_no_solution(spec, cfg, rng):
    """Sigma^3 targets with C <= 1/mu must raise; deviation counts misses."""
    n = cfg.samples
    misses = 0
    for mu, ui in zip(rng.uniform(*PARAM_RANGE, size=n), rng.uniform(0.0, 1.0, size=n)):
        try:
            cmc_solve(spec.with_params(1.0, mu, mu), ui / mu)
        except NoSolution:
            continue
        misses += 1
    return n, float(misses)


# name, function, tolerance, applies(spec), expected_fail(spec)
def _always(spec):
    return True


def _tabulated(spec):
    return spec.is_tabulated


def _never(spec):
    return False


def _definite_mixing(spec):
    # with eps2 != eps3 the mixing term can vanish and |H| is unbounded
    return spec.signature.eps2 == spec.signature.eps3


def _checks():
    checks = [
        ("round_sphere", _round_sphere, 1e-12, lambda s: s.space is SpaceKind.S3 and s.signature == RIEMANNIAN, _never),
        ("connection_oracle", _connection_oracle, 1e-12, _tabulated, _never),
        ("torsion_free", _torsion_free, 1e-14, _always, _never),
        ("metric_compatible", _metric_compat, 1e-14, _always, _never),
        ("curvature_swap_symmetry", _curvature_swap, 1e-12, _always, _never),
    ]
    for plane in Plane:
        checks.append((f"curvature_closed_form_{plane.name.lower()}", _curvature_closed_form(plane), 1e-12, _tabulated, _never))
    checks.append((
        "curvature_yz_as_printed",
        _curvature_closed_form(Plane.YZ, as_printed=True),
        1e-12,
        lambda s: s.is_tabulated and s.space is SpaceKind.SIGMA3,
        lambda s: s.signature == RIEMANNIAN,
    ))
    for plane in Plane:
        name = plane.name.lower()
        checks.append((f"sign_region_boundary_{name}", _sign_boundary(plane), 1e-9, _tabulated, _never))
        checks.append((f"sign_region_interior_{name}", _sign_interior(plane), 0.0, _tabulated, _never))
    checks += [
        ("first_form_identities", _form_identities, 1e-12, _always, _never),
        ("first_form_vs_metric", _form_vs_metric, 1e-12, _always, _never),
        ("gram_schmidt_orthonormal", _gram_schmidt, 1e-12, lambda s: s.signature == RIEMANNIAN, _never),
        ("partials_fd", _partials_fd, 1e-9, _always, _never),
        ("second_partial_fd", _second_fd, 1e-5, _always, _never),
        ("mixed_second_ff_fd", _mixed_fd, 1e-7, _definite_mixing, _never),
        ("b_beta_antisymmetric", _b_beta_antisym, 1e-12, _definite_mixing, _never),
        ("b_beta_antisymmetric_fd", _b_beta_antisym_fd, 1e-6, _definite_mixing, _never),
        ("b_tangential_components", _b_tangential, 1e-12, _definite_mixing, _never),
        ("b_closed_form", _b_closed_form, 1e-10, _definite_mixing, _never),
        ("h_closed_form", _h_closed_form, 1e-10, _definite_mixing, _never),
        ("h_fd_pipeline", _h_fd, 1e-6, _definite_mixing, _never),
        ("signature_invariance", _signature_invariance, 1e-9, _definite_mixing, _never),
        ("lambda_independence", _lambda_independence, 1e-12, _definite_mixing, _never),
        ("sigma3_lower_bound", _sigma3_lower_bound, 0.0, lambda s: s.space is SpaceKind.SIGMA3 and _definite_mixing(s), _never),
        ("clifford_minimal", _clifford_minimal, 1e-12, lambda s: s.space is SpaceKind.S3 and _definite_mixing(s), _never),
        ("cmc_round_trip", _cmc_round_trip, 1e-10, _definite_mixing, _never),
        ("cmc_no_solution", _cmc_no_solution, 0.0, lambda s: s.space is SpaceKind.SIGMA3 and _definite_mixing(s), _never),
    ]
    return checks


CHECK_NAMES = tuple(c[0] for c in _checks())


def _tasks(specs, only=None):
    tasks = []
    for spec in specs:
        for name, fn, tol, applies, xfail in _checks():
            if only is not None and name not in only:
                continue
            if applies(spec):
                tasks.append((f"{spec.space.value}/{spec.signature}:{name}", fn, spec, tol, xfail(spec)))
    return tasks


def _run(task, cfg):
    full, fn, spec, tol, xfail = task
    try:
        cases, dev = fn(spec, cfg, check_rng(cfg.seed, full))
    except Exception:  # a crashing check is a failed check, not a crashed suite
        cases, dev = 0, math.inf
    return CheckResult(full, int(cases), float(dev), tol, bool(dev <= tol), xfail)


def run_suite(specs=TABULATED_CASES, cfg: FdConfig = None, workers: int = 1, only=None) -> VerificationReport:
    """Run every applicable check for each spec.

    Only the space and signature of each spec matter; parameters and torus
    points are sampled. ``only`` restricts to a set of check names.
    """
    cfg = cfg or FdConfig()
    tasks = _tasks(specs, only)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda t: _run(t, cfg), tasks))
    else:
        results = [_run(t, cfg) for t in tasks]
    return VerificationReport(tuple(results), cfg)
