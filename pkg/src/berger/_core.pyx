# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels. Same API and operation order as ``_core_py``."""
from libc.math cimport cos, sin, cosh, sinh, sqrt, fabs, NAN

DET_CUTOFF = 1e-14
SURFACE_COLUMNS = 16

cdef double _DET_CUTOFF = 1e-14


cdef inline void _mul(double sigma, const double* p, const double* q, double* r) noexcept nogil:
    cdef double x1 = p[0], x2 = p[1], x3 = p[2], x4 = p[3]
    cdef double y1 = q[0], y2 = q[1], y3 = q[2], y4 = q[3]
    r[0] = x1 * y1 - x2 * y2 - sigma * (x3 * y3 + x4 * y4)
    r[1] = x1 * y2 + x2 * y1 - sigma * (x3 * y4 - x4 * y3)
    r[2] = x1 * y3 + x2 * y4 + x3 * y1 - x4 * y2
    r[3] = x1 * y4 - x2 * y3 + x3 * y2 + x4 * y1


cdef inline void _pullback(double sigma, const double* p, const double* v, double* r) noexcept nogil:
    cdef double pinv[4]
    pinv[0] = p[0]
    pinv[1] = -p[1]
    pinv[2] = -p[2]
    pinv[3] = -p[3]
    _mul(sigma, pinv, v, r)


cdef inline double _wdot(double w1, double w2, double w3, const double* u, const double* v) noexcept nogil:
    return u[0] * v[0] + w1 * u[1] * v[1] + w2 * u[2] * v[2] + w3 * u[3] * v[3]


cdef inline void _embed(double sigma, double theta, double alpha, double beta, double* out) noexcept nogil:
    cdef double r, s
    if sigma > 0:
        r = cos(theta)
        s = sin(theta)
    else:
        r = cosh(theta)
        s = sinh(theta)
    out[0] = r * cos(alpha)
    out[1] = r * sin(alpha)
    out[2] = s * cos(beta)
    out[3] = s * sin(beta)


cdef inline void _tangents(double sigma, double theta, double alpha, double beta,
                           double* da, double* db, double* dth, double* dda, double* ddb) noexcept nogil:
    cdef double r, s, dr, ds, ca, sa, cb, sb
    if sigma > 0:
        r = cos(theta)
        s = sin(theta)
        dr = -s
        ds = r
    else:
        r = cosh(theta)
        s = sinh(theta)
        dr = s
        ds = r
    ca = cos(alpha)
    sa = sin(alpha)
    cb = cos(beta)
    sb = sin(beta)
    da[0] = -r * sa
    da[1] = r * ca
    da[2] = 0.0
    da[3] = 0.0
    db[0] = 0.0
    db[1] = 0.0
    db[2] = -s * sb
    db[3] = s * cb
    dth[0] = dr * ca
    dth[1] = dr * sa
    dth[2] = ds * cb
    dth[3] = ds * sb
    dda[0] = -r * ca
    dda[1] = -r * sa
    dda[2] = 0.0
    dda[3] = 0.0
    ddb[0] = 0.0
    ddb[1] = 0.0
    ddb[2] = -s * cb
    ddb[3] = -s * sb


cdef inline void _normal_coords(double sigma, const double* scale, double w1, double w2, double w3,
                                const double* p, const double* up, const double* ua, const double* ub,
                                double E, double F, double G, double det,
                                const double* v, double* out) noexcept nogil:
    cdef double uv[4]
    cdef double sa, sb, sn, a, b, r0, r1, r2, r3
    _pullback(sigma, p, v, uv)
    sa = _wdot(w1, w2, w3, uv, ua)
    sb = _wdot(w1, w2, w3, uv, ub)
    sn = _wdot(w1, w2, w3, uv, up)
    a = (G * sa - F * sb) / det
    b = (E * sb - F * sa) / det
    r0 = uv[0] - a * ua[0] - b * ub[0] - sn * up[0]
    r1 = uv[1] - a * ua[1] - b * ub[1] - sn * up[1]
    r2 = uv[2] - a * ua[2] - b * ub[2] - sn * up[2]
    r3 = uv[3] - a * ua[3] - b * ub[3] - sn * up[3]
    out[0] = scale[0] * r1
    out[1] = -scale[1] * r2
    out[2] = scale[2] * r3
    out[3] = r0


cdef void _surface_point(double sigma, const double* eps, const double* scale,
                         const double* p, const double* da, const double* db,
                         const double* dda, const double* ddb, double* out) noexcept nogil:
    cdef double w1 = eps[0] * scale[0] * scale[0]
    cdef double w2 = eps[1] * scale[1] * scale[1]
    cdef double w3 = eps[2] * scale[2] * scale[2]
    cdef double up[4]
    cdef double ua[4]
    cdef double ub[4]
    cdef double E, F, G, det, r, hx, hy, hz, hh
    cdef int k
    _pullback(sigma, p, p, up)
    _pullback(sigma, p, da, ua)
    _pullback(sigma, p, db, ub)
    E = _wdot(w1, w2, w3, ua, ua)
    F = _wdot(w1, w2, w3, ua, ub)
    G = _wdot(w1, w2, w3, ub, ub)
    det = E * G - F * F
    out[0] = E
    out[1] = F
    out[2] = G
    out[3] = det
    if not fabs(det) >= _DET_CUTOFF:
        for k in range(4, 16):
            out[k] = NAN
        return
    _normal_coords(sigma, scale, w1, w2, w3, p, up, ua, ub, E, F, G, det, dda, out + 4)
    _normal_coords(sigma, scale, w1, w2, w3, p, up, ua, ub, E, F, G, det, ddb, out + 12)
    r = 0.5 * (G - E) / det
    hx = r * out[4]
    hy = r * out[5]
    hz = r * out[6]
    hh = eps[0] * hx * hx + eps[1] * hy * hy + eps[2] * hz * hz
    out[8] = hx
    out[9] = hy
    out[10] = hz
    out[11] = sqrt(fabs(hh))


cdef inline void _central(double sigma, double theta, double alpha, double beta,
                          double h, int which, double* out) noexcept nogil:
    cdef double fp[4]
    cdef double fm[4]
    cdef int i
    if which == 0:
        _embed(sigma, theta, alpha + h, beta, fp)
        _embed(sigma, theta, alpha - h, beta, fm)
    else:
        _embed(sigma, theta, alpha, beta + h, fp)
        _embed(sigma, theta, alpha, beta - h, fm)
    for i in range(4):
        out[i] = (fp[i] - fm[i]) / (2.0 * h)


cdef inline void _second(double sigma, double theta, double alpha, double beta,
                         double h, int which, const double* p, double* out) noexcept nogil:
    cdef double fp[4]
    cdef double fm[4]
    cdef int i
    if which == 0:
        _embed(sigma, theta, alpha + h, beta, fp)
        _embed(sigma, theta, alpha - h, beta, fm)
    else:
        _embed(sigma, theta, alpha, beta + h, fp)
        _embed(sigma, theta, alpha, beta - h, fm)
    for i in range(4):
        out[i] = (fp[i] - 2.0 * p[i] + fm[i]) / (h * h)


cdef inline void _richardson_second(double sigma, double theta, double alpha, double beta,
                                    double h, int which, double* out) noexcept nogil:
    cdef double p[4]
    cdef double d1[4]
    cdef double d2[4]
    cdef int i
    _embed(sigma, theta, alpha, beta, p)
    _second(sigma, theta, alpha, beta, h, which, p, d1)
    _second(sigma, theta, alpha, beta, 2.0 * h, which, p, d2)
    for i in range(4):
        out[i] = (4.0 * d1[i] - d2[i]) / 3.0


cdef inline void _structure_constants(double sigma, double lam, double mu, double nu, double* c) noexcept nogil:
    cdef int k
    cdef double xy = 2.0 * nu / (lam * mu)
    cdef double zx = 2.0 * mu / (lam * nu)
    cdef double yz = sigma * 2.0 * lam / (mu * nu)
    for k in range(27):
        c[k] = 0.0
    c[0 * 9 + 1 * 3 + 2] = xy
    c[1 * 9 + 0 * 3 + 2] = -xy
    c[2 * 9 + 0 * 3 + 1] = zx
    c[0 * 9 + 2 * 3 + 1] = -zx
    c[1 * 9 + 2 * 3 + 0] = yz
    c[2 * 9 + 1 * 3 + 0] = -yz


cdef inline void _koszul(const double* c, const double* eps, double* gamma) noexcept nogil:
    cdef int i, j, k
    for i in range(3):
        for j in range(3):
            for k in range(3):
                gamma[9 * i + 3 * j + k] = eps[k] * 0.5 * (
                    eps[k] * c[9 * i + 3 * j + k]
                    + eps[j] * c[9 * k + 3 * i + j]
                    - eps[i] * c[9 * j + 3 * k + i]
                )


cdef inline double _curvature_numerator(const double* gamma, const double* c, const double* eps,
                                        int i, int j) noexcept nogil:
    cdef double acc = 0.0
    cdef int a
    for a in range(3):
        acc += (
            gamma[9 * j + 3 * j + a] * gamma[9 * i + 3 * a + i]
            - gamma[9 * i + 3 * j + a] * gamma[9 * j + 3 * a + i]
            - c[9 * i + 3 * j + a] * gamma[9 * a + 3 * j + i]
        )
    return eps[i] * acc


# ---------------------------------------------------------------- Python API

cdef inline void _load4(object seq, double* out) except *:
    out[0] = seq[0]
    out[1] = seq[1]
    out[2] = seq[2]
    out[3] = seq[3]


cdef inline void _load3(object seq, double* out) except *:
    out[0] = seq[0]
    out[1] = seq[1]
    out[2] = seq[2]


def mul(double sigma, p, q):
    cdef double a[4]
    cdef double b[4]
    cdef double r[4]
    _load4(p, a)
    _load4(q, b)
    _mul(sigma, a, b, r)
    return (r[0], r[1], r[2], r[3])


def pullback(double sigma, p, v):
    """Left translation of the ambient vector ``v`` by ``p^{-1}``."""
    cdef double a[4]
    cdef double b[4]
    cdef double r[4]
    _load4(p, a)
    _load4(v, b)
    _pullback(sigma, a, b, r)
    return (r[0], r[1], r[2], r[3])


def inner(double sigma, eps, scale, p, a, b):
    cdef double e[3]
    cdef double s[3]
    cdef double pp[4]
    cdef double aa[4]
    cdef double bb[4]
    cdef double u[4]
    cdef double v[4]
    _load3(eps, e)
    _load3(scale, s)
    _load4(p, pp)
    _load4(a, aa)
    _load4(b, bb)
    _pullback(sigma, pp, aa, u)
    _pullback(sigma, pp, bb, v)
    return _wdot(e[0] * s[0] * s[0], e[1] * s[1] * s[1], e[2] * s[2] * s[2], u, v)


def frame_coords(double sigma, scale, p, v):
    """Components of ``v`` on (X_p, Y_p, Z_p, N_p)."""
    cdef double s[3]
    cdef double pp[4]
    cdef double vv[4]
    cdef double u[4]
    _load3(scale, s)
    _load4(p, pp)
    _load4(v, vv)
    _pullback(sigma, pp, vv, u)
    return (s[0] * u[1], -s[1] * u[2], s[2] * u[3], u[0])


def embed(double sigma, double theta, double alpha, double beta):
    cdef double r[4]
    _embed(sigma, theta, alpha, beta, r)
    return (r[0], r[1], r[2], r[3])


def tangents(double sigma, double theta, double alpha, double beta):
    """Analytic (d_alpha, d_beta, d_theta, dd_alpha, dd_beta) of the torus map."""
    cdef double v[20]
    _tangents(sigma, theta, alpha, beta, v, v + 4, v + 8, v + 12, v + 16)
    return tuple((v[4 * k], v[4 * k + 1], v[4 * k + 2], v[4 * k + 3]) for k in range(5))


def richardson_second(double sigma, double theta, double alpha, double beta, double h, int which):
    """Second difference at steps h and 2h, extrapolated to O(h^4)."""
    cdef double r[4]
    _richardson_second(sigma, theta, alpha, beta, h, which, r)
    return (r[0], r[1], r[2], r[3])


def surface_point(double sigma, eps, scale, p, da, db, dda, ddb):
    """Orthogonal-decomposition pipeline at one torus point (16-tuple, see ``_core_py``)."""
    cdef double e[3]
    cdef double s[3]
    cdef double v[20]
    cdef double out[16]
    _load3(eps, e)
    _load3(scale, s)
    _load4(p, v)
    _load4(da, v + 4)
    _load4(db, v + 8)
    _load4(dda, v + 12)
    _load4(ddb, v + 16)
    _surface_point(sigma, e, s, v, v + 4, v + 8, v + 12, v + 16, out)
    return tuple(out[k] for k in range(16))


def surface_batch(double sigma, eps, const double[:, :] params, const double[:, :] points,
                  double fd_step, double curv_step, double[:, :] out):
    """Run the surface pipeline per row; see ``_core_py.surface_batch``."""
    cdef double e[3]
    cdef double scale[3]
    cdef double p[4]
    cdef double da[4]
    cdef double db[4]
    cdef double dth[4]
    cdef double dda[4]
    cdef double ddb[4]
    cdef double res[16]
    cdef double theta, alpha, beta
    cdef Py_ssize_t row, n = params.shape[0]
    cdef int col
    _load3(eps, e)
    with nogil:
        for row in range(n):
            scale[0] = params[row, 0]
            scale[1] = params[row, 1]
            scale[2] = params[row, 2]
            theta = points[row, 0]
            alpha = points[row, 1]
            beta = points[row, 2]
            _embed(sigma, theta, alpha, beta, p)
            if fd_step == 0.0:
                _tangents(sigma, theta, alpha, beta, da, db, dth, dda, ddb)
            else:
                _central(sigma, theta, alpha, beta, fd_step, 0, da)
                _central(sigma, theta, alpha, beta, fd_step, 1, db)
                _richardson_second(sigma, theta, alpha, beta, curv_step, 0, dda)
                _richardson_second(sigma, theta, alpha, beta, curv_step, 1, ddb)
            _surface_point(sigma, e, scale, p, da, db, dda, ddb, res)
            for col in range(16):
                out[row, col] = res[col]


def structure_constants(double sigma, double lam, double mu, double nu):
    cdef double c[27]
    _structure_constants(sigma, lam, mu, nu, c)
    return [c[k] for k in range(27)]


def koszul(c, eps):
    """Frame coefficients of the Levi-Civita connection of a left-invariant
    metric with structure constants ``c`` and diagonal signature ``eps``."""
    cdef double cc[27]
    cdef double e[3]
    cdef double g[27]
    cdef int k
    for k in range(27):
        cc[k] = c[k]
    _load3(eps, e)
    _koszul(cc, e, g)
    return [g[k] for k in range(27)]


def curvature_numerator(gamma, c, eps, int i, int j):
    cdef double gg[27]
    cdef double cc[27]
    cdef double e[3]
    cdef int k
    for k in range(27):
        gg[k] = gamma[k]
        cc[k] = c[k]
    _load3(eps, e)
    return _curvature_numerator(gg, cc, e, i, j)


def connection_batch(double sigma, eps, const double[:, :] params,
                     double[:, :] gamma_out, double[:, :] num_out):
    """Koszul tables and the XY, XZ, YZ curvature numerators per parameter row."""
    cdef double e[3]
    cdef double c[27]
    cdef double g[27]
    cdef Py_ssize_t row, n = params.shape[0]
    cdef int k
    _load3(eps, e)
    with nogil:
        for row in range(n):
            _structure_constants(sigma, params[row, 0], params[row, 1], params[row, 2], c)
            _koszul(c, e, g)
            for k in range(27):
                gamma_out[row, k] = g[k]
            num_out[row, 0] = _curvature_numerator(g, c, e, 0, 1)
            num_out[row, 1] = _curvature_numerator(g, c, e, 0, 2)
            num_out[row, 2] = _curvature_numerator(g, c, e, 1, 2)
