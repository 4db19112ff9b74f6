"""Pure-Python kernels.

Reference backend and fallback for the compiled ``_core`` extension. The two
modules expose the same functions with the same argument conventions and
perform floating point operations in the same order, so results agree
bit for bit on IEEE-754 hardware.

Conventions shared by both backends:

* ``sigma`` is +1 for S^3 and -1 for Sigma^3; it is the sign in front of the
  ``conj(w1) * w2`` term of the group law.
* points and ambient vectors are 4 reals ``(Re z, Im z, Re w, Im w)``.
* ``eps`` is the signature ``(eps1, eps2, eps3)`` and ``scale`` is
  ``(lambda, mu, nu)``.
* structure constants and connection tables are flat sequences of 27 reals
  indexed ``9 * i + 3 * j + k`` over the frame order X, Y, Z.
"""
import math

DET_CUTOFF = 1e-14
NAN = float("nan")
SURFACE_COLUMNS = 16


def mul(sigma, p, q):
    x1, x2, x3, x4 = p
    y1, y2, y3, y4 = q
    return (
        x1 * y1 - x2 * y2 - sigma * (x3 * y3 + x4 * y4),
        x1 * y2 + x2 * y1 - sigma * (x3 * y4 - x4 * y3),
        x1 * y3 + x2 * y4 + x3 * y1 - x4 * y2,
        x1 * y4 - x2 * y3 + x3 * y2 + x4 * y1,
    )


def pullback(sigma, p, v):
    """Left translation of the ambient vector ``v`` by ``p^{-1}``."""
    return mul(sigma, (p[0], -p[1], -p[2], -p[3]), v)


def _wdot(w1, w2, w3, u, v):
    return u[0] * v[0] + w1 * u[1] * v[1] + w2 * u[2] * v[2] + w3 * u[3] * v[3]


def inner(sigma, eps, scale, p, a, b):
    lam, mu, nu = scale
    u = pullback(sigma, p, a)
    v = pullback(sigma, p, b)
    return _wdot(eps[0] * lam * lam, eps[1] * mu * mu, eps[2] * nu * nu, u, v)


def frame_coords(sigma, scale, p, v):
    """Components of ``v`` on (X_p, Y_p, Z_p, N_p)."""
    u = pullback(sigma, p, v)
    return (scale[0] * u[1], -scale[1] * u[2], scale[2] * u[3], u[0])


def embed(sigma, theta, alpha, beta):
    if sigma > 0:
        r, s = math.cos(theta), math.sin(theta)
    else:
        r, s = math.cosh(theta), math.sinh(theta)
    return (r * math.cos(alpha), r * math.sin(alpha), s * math.cos(beta), s * math.sin(beta))


def tangents(sigma, theta, alpha, beta):
    """Analytic (d_alpha, d_beta, d_theta, dd_alpha, dd_beta) of the torus map."""
    if sigma > 0:
        r, s = math.cos(theta), math.sin(theta)
        dr, ds = -s, r
    else:
        r, s = math.cosh(theta), math.sinh(theta)
        dr, ds = s, r
    ca, sa = math.cos(alpha), math.sin(alpha)
    cb, sb = math.cos(beta), math.sin(beta)
    return (
        (-r * sa, r * ca, 0.0, 0.0),
        (0.0, 0.0, -s * sb, s * cb),
        (dr * ca, dr * sa, ds * cb, ds * sb),
        (-r * ca, -r * sa, 0.0, 0.0),
        (0.0, 0.0, -s * cb, -s * sb),
    )


def _normal_coords(sigma, scale, w1, w2, w3, p, up, ua, ub, E, F, G, det, v):
    # v minus its projections on span(d_alpha, d_beta) and on N, in frame coordinates
    uv = pullback(sigma, p, v)
    sa = _wdot(w1, w2, w3, uv, ua)
    sb = _wdot(w1, w2, w3, uv, ub)
    sn = _wdot(w1, w2, w3, uv, up)
    a = (G * sa - F * sb) / det
    b = (E * sb - F * sa) / det
    r0 = uv[0] - a * ua[0] - b * ub[0] - sn * up[0]
    r1 = uv[1] - a * ua[1] - b * ub[1] - sn * up[1]
    r2 = uv[2] - a * ua[2] - b * ub[2] - sn * up[2]
    r3 = uv[3] - a * ua[3] - b * ub[3] - sn * up[3]
    return (scale[0] * r1, -scale[1] * r2, scale[2] * r3, r0)


def surface_point(sigma, eps, scale, p, da, db, dda, ddb):
    """Orthogonal-decomposition pipeline at one torus point.

    Returns a 16-tuple::

        E, F, G, EG - F^2,
        B(da, da) on (X, Y, Z, N),
        H on (X, Y, Z), |H|,
        B(db, db) on (X, Y, Z, N)

    Everything past the determinant is NaN when ``|EG - F^2| < DET_CUTOFF``.
    """
    lam, mu, nu = scale
    w1 = eps[0] * lam * lam
    w2 = eps[1] * mu * mu
    w3 = eps[2] * nu * nu
    up = pullback(sigma, p, p)
    ua = pullback(sigma, p, da)
    ub = pullback(sigma, p, db)
    E = _wdot(w1, w2, w3, ua, ua)
    F = _wdot(w1, w2, w3, ua, ub)
    G = _wdot(w1, w2, w3, ub, ub)
    det = E * G - F * F
    if not abs(det) >= DET_CUTOFF:
        return (E, F, G, det) + (NAN,) * 12
    ba = _normal_coords(sigma, scale, w1, w2, w3, p, up, ua, ub, E, F, G, det, dda)
    bb = _normal_coords(sigma, scale, w1, w2, w3, p, up, ua, ub, E, F, G, det, ddb)
    r = 0.5 * (G - E) / det
    hx = r * ba[0]
    hy = r * ba[1]
    hz = r * ba[2]
    hh = eps[0] * hx * hx + eps[1] * hy * hy + eps[2] * hz * hz
    return (E, F, G, det) + ba + (hx, hy, hz, math.sqrt(abs(hh))) + bb


def _central(sigma, theta, alpha, beta, h, which):
    if which == 0:
        fp = embed(sigma, theta, alpha + h, beta)
        fm = embed(sigma, theta, alpha - h, beta)
    else:
        fp = embed(sigma, theta, alpha, beta + h)
        fm = embed(sigma, theta, alpha, beta - h)
    return tuple((fp[i] - fm[i]) / (2.0 * h) for i in range(4))


def _second(sigma, theta, alpha, beta, h, which, p):
    if which == 0:
        fp = embed(sigma, theta, alpha + h, beta)
        fm = embed(sigma, theta, alpha - h, beta)
    else:
        fp = embed(sigma, theta, alpha, beta + h)
        fm = embed(sigma, theta, alpha, beta - h)
    return tuple((fp[i] - 2.0 * p[i] + fm[i]) / (h * h) for i in range(4))


def richardson_second(sigma, theta, alpha, beta, h, which):
    """Second difference at steps h and 2h, extrapolated to O(h^4)."""
    p = embed(sigma, theta, alpha, beta)
    d1 = _second(sigma, theta, alpha, beta, h, which, p)
    d2 = _second(sigma, theta, alpha, beta, 2.0 * h, which, p)
    return tuple((4.0 * d1[i] - d2[i]) / 3.0 for i in range(4))


def surface_batch(sigma, eps, params, points, fd_step, curv_step, out):
    """Run ``surface_point`` over rows of ``params`` (lam, mu, nu) and
    ``points`` (theta, alpha, beta), writing 16 columns per row into ``out``.

    ``fd_step == 0`` uses analytic derivatives; otherwise first derivatives
    are central differences at ``fd_step`` and second derivatives are
    Richardson-extrapolated second differences at ``curv_step``.
    """
    n = len(params)
    for row in range(n):
        scale = (float(params[row][0]), float(params[row][1]), float(params[row][2]))
        theta = float(points[row][0])
        alpha = float(points[row][1])
        beta = float(points[row][2])
        p = embed(sigma, theta, alpha, beta)
        if fd_step == 0.0:
            da, db, _, dda, ddb = tangents(sigma, theta, alpha, beta)
        else:
            da = _central(sigma, theta, alpha, beta, fd_step, 0)
            db = _central(sigma, theta, alpha, beta, fd_step, 1)
            dda = richardson_second(sigma, theta, alpha, beta, curv_step, 0)
            ddb = richardson_second(sigma, theta, alpha, beta, curv_step, 1)
        res = surface_point(sigma, eps, scale, p, da, db, dda, ddb)
        for col in range(SURFACE_COLUMNS):
            out[row][col] = res[col]


def structure_constants(sigma, lam, mu, nu):
    c = [0.0] * 27
    xy = 2.0 * nu / (lam * mu)
    zx = 2.0 * mu / (lam * nu)
    yz = sigma * 2.0 * lam / (mu * nu)
    c[0 * 9 + 1 * 3 + 2] = xy
    c[1 * 9 + 0 * 3 + 2] = -xy
    c[2 * 9 + 0 * 3 + 1] = zx
    c[0 * 9 + 2 * 3 + 1] = -zx
    c[1 * 9 + 2 * 3 + 0] = yz
    c[2 * 9 + 1 * 3 + 0] = -yz
    return c


def koszul(c, eps):
    """Frame coefficients of the Levi-Civita connection of a left-invariant
    metric with structure constants ``c`` and diagonal signature ``eps``."""
    gamma = [0.0] * 27
    for i in range(3):
        for j in range(3):
            for k in range(3):
                gamma[9 * i + 3 * j + k] = eps[k] * 0.5 * (
                    eps[k] * c[9 * i + 3 * j + k]
                    + eps[j] * c[9 * k + 3 * i + j]
                    - eps[i] * c[9 * j + 3 * k + i]
                )
    return gamma


def curvature_numerator(gamma, c, eps, i, j):
    """g(R(E_i, E_j) E_j, E_i) from frame tables, with
    R(A, B)C = nabla_A nabla_B C - nabla_B nabla_A C - nabla_[A,B] C."""
    acc = 0.0
    for a in range(3):
        acc += (
            gamma[9 * j + 3 * j + a] * gamma[9 * i + 3 * a + i]
            - gamma[9 * i + 3 * j + a] * gamma[9 * j + 3 * a + i]
            - c[9 * i + 3 * j + a] * gamma[9 * a + 3 * j + i]
        )
    return eps[i] * acc


def connection_batch(sigma, eps, params, gamma_out, num_out):
    """Koszul tables and the XY, XZ, YZ curvature numerators per parameter row."""
    n = len(params)
    for row in range(n):
        c = structure_constants(
            sigma, float(params[row][0]), float(params[row][1]), float(params[row][2])
        )
        gamma = koszul(c, eps)
        for idx in range(27):
            gamma_out[row][idx] = gamma[idx]
        num_out[row][0] = curvature_numerator(gamma, c, eps, 0, 1)
        num_out[row][1] = curvature_numerator(gamma, c, eps, 0, 2)
        num_out[row][2] = curvature_numerator(gamma, c, eps, 1, 2)
