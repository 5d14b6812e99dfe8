# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scalar kernels: erfi-family special functions and the potential
evaluations sitting in every hot loop.

This is the compiled twin of ``erfiolo._pykernels``.  The two keep the same
operation order so results agree to the last few ulps (the build disables
FP contraction for that reason).  Any change here must be mirrored there.
"""

from libc.math cimport exp, expm1, floor, fabs, log, sqrt, INFINITY

X_MAX = 26.0
EXP_ARG_CAP = 500.0
LOG_DBL_MAX = 709.782712893384

cdef double _X_MAX = 26.0
cdef double _EXP_ARG_CAP = 500.0
cdef double _LOG_DBL_MAX = 709.782712893384
cdef double _SQRT_PI = 1.7724538509055160273
cdef double _SERIES_CUT = 3.0

cdef double _RYB_H = 0.2
cdef int _RYB_TERMS = 18
cdef double[18] _RYB_EXPTAB

cdef int _j
for _j in range(18):
    _RYB_EXPTAB[_j] = exp(-((2 * _j + 1) * _RYB_H) ** 2)


cdef double _erfi_series(double ax):
    cdef double s = ax
    cdef double term = ax
    cdef double xx = ax * ax
    cdef double contrib
    cdef int k = 1
    while k < 400:
        term = term * xx / k
        contrib = term / (2 * k + 1)
        s += contrib
        if contrib <= 1e-17 * s:
            break
        k += 1
    return s


cdef double _dawson_large(double ax):
    cdef double n0 = 2.0 * floor(ax / (2.0 * _RYB_H) + 0.5)
    cdef double xp = ax - n0 * _RYB_H
    cdef double e1 = exp(2.0 * xp * _RYB_H)
    cdef double e2 = e1 * e1
    cdef double fp = e1
    cdef double fm = 1.0 / e1
    cdef double s = 0.0
    cdef int j, m
    for j in range(_RYB_TERMS):
        m = 2 * j + 1
        s += _RYB_EXPTAB[j] * (fp / (n0 + m) + fm / (n0 - m))
        fp *= e2
        fm /= e2
    return exp(-xp * xp) * s / _SQRT_PI


cpdef double dawson(double x):
    """Dawson integral exp(-x^2) * int_0^x exp(u^2) du, any finite x."""
    cdef double ax = fabs(x)
    cdef double d
    if ax <= _SERIES_CUT:
        d = _erfi_series(ax) * exp(-ax * ax)
    else:
        d = _dawson_large(ax)
    return d if x >= 0.0 else -d


cpdef double erfi(double x) except? -1.0e308:
    """int_0^x exp(u^2) du.  Raises OverflowError for |x| > X_MAX."""
    cdef double ax = fabs(x)
    cdef double v
    if ax <= _SERIES_CUT:
        v = _erfi_series(ax)
    elif ax <= _X_MAX:
        v = exp(ax * ax) * _dawson_large(ax)
    else:
        raise OverflowError("erfi argument %g exceeds overflow guard %g" % (x, _X_MAX))
    return v if x >= 0.0 else -v


cpdef double erfi_antideriv(double w) except? -1.0e308:
    """int_0^w erfi(u) du = w*erfi(w) - (exp(w^2)-1)/2; even in w."""
    cdef double aw = fabs(w)
    if aw <= _SERIES_CUT:
        return aw * _erfi_series(aw) - 0.5 * expm1(aw * aw)
    if aw <= _X_MAX:
        return exp(aw * aw) * (aw * _dawson_large(aw) - 0.5) + 0.5
    raise OverflowError("erfi_antideriv argument %g exceeds overflow guard %g" % (w, _X_MAX))


cdef inline double _exp_or_inf(double logmag):
    if logmag > _LOG_DBL_MAX:
        return INFINITY
    return exp(logmag)


cpdef double phi(double x, double y, double eps, double alpha) except? -1.0e308:
    """The base potential eps*sqrt(alpha x)*(2*int_0^{y/sqrt(4 alpha x)} erfi - 1)."""
    if x <= 0.0:
        raise ValueError("phi: first argument must be positive, got %g" % x)
    cdef double w = y / sqrt(4.0 * alpha * x)
    cdef double ww = w * w
    cdef double g, logmag
    if ww <= _EXP_ARG_CAP:
        return eps * sqrt(alpha * x) * (2.0 * erfi_antideriv(w) - 1.0)
    g = 2.0 * fabs(w) * _dawson_large(fabs(w)) - 1.0
    logmag = log(eps) + 0.5 * log(alpha * x) + ww + log(g)
    return _exp_or_inf(logmag)


cpdef tuple phi_partials(double x, double y, double eps, double alpha):
    """All five partial derivatives of phi at (x, y): (d1, d2, d11, d12, d22)."""
    if x <= 0.0:
        raise ValueError("phi_partials: first argument must be positive, got %g" % x)
    cdef double sx = sqrt(x)
    cdef double sa = sqrt(alpha)
    cdef double w = y / sqrt(4.0 * alpha * x)
    cdef double ww = w * w
    cdef double e, d1, d2, d11, d12, d22, dw, le
    if ww <= _EXP_ARG_CAP:
        e = exp(ww)
        d1 = -(eps * sa) / (2.0 * sx) * e
        d2 = eps * erfi(w)
        d11 = (eps * sa) / (4.0 * x * sx) * (2.0 * ww + 1.0) * e
        d12 = -(eps * y) / (4.0 * sa * x * sx) * e
        d22 = eps / (2.0 * sa * sx) * e
        return (d1, d2, d11, d12, d22)
    dw = dawson(w)
    le = log(eps)
    d1 = -_exp_or_inf(le + log(sa / (2.0 * sx)) + ww)
    d2 = _exp_or_inf(le + log(fabs(dw)) + ww)
    if dw < 0.0:
        d2 = -d2
    d11 = _exp_or_inf(le + log(sa * (2.0 * ww + 1.0) / (4.0 * x * sx)) + ww)
    d12 = _exp_or_inf(le + log(fabs(y) / (4.0 * sa * x * sx)) + ww)
    if y > 0.0:
        d12 = -d12
    d22 = _exp_or_inf(le + log(1.0 / (2.0 * sa * sx)) + ww)
    return (d1, d2, d11, d12, d22)


cpdef double bigphi(double V, double S, double eps, double alpha, double k, double z) except? -1.0e308:
    """Shifted potential Phi(V, S) = phi(V + z + k*S, S)."""
    cdef double x = V + z + k * S
    if x <= 0.0:
        raise ValueError("potential domain violated: V + z + k*S = %g <= 0" % x)
    return phi(x, S, eps, alpha)


cpdef double bigphi_d2(double V, double S, double eps, double alpha, double k, double z) except? -1.0e308:
    """d/dS of Phi: the raw prediction; saturates to signed infinity."""
    cdef double x = V + z + k * S
    if x <= 0.0:
        raise ValueError("potential domain violated: V + z + k*S = %g <= 0" % x)
    cdef double sx = sqrt(x)
    cdef double w = S / sqrt(4.0 * alpha * x)
    cdef double ww = w * w
    cdef double bracket, logmag, v
    if ww <= _EXP_ARG_CAP:
        return eps * erfi(w) - eps * k * sqrt(alpha) / (2.0 * sx) * exp(ww)
    bracket = dawson(w) - k * sqrt(alpha) / (2.0 * sx)
    if bracket == 0.0:
        return 0.0
    logmag = log(eps) + ww + log(fabs(bracket))
    v = _exp_or_inf(logmag)
    return v if bracket > 0.0 else -v


cpdef double bigphi_d22(double V, double S, double eps, double alpha, double k, double z) except? -1.0e308:
    """Second S-derivative of Phi; strictly positive on the valid domain."""
    cdef double x = V + z + k * S
    if x <= 0.0:
        raise ValueError("potential domain violated: V + z + k*S = %g <= 0" % x)
    cdef double sx = sqrt(x)
    cdef double w = S / sqrt(4.0 * alpha * x)
    cdef double ww = w * w
    cdef double pref = sqrt(alpha) / (4.0 * x * sx) * (2.0 * k * k * ww + k * k + 2.0 * (V + z) / alpha)
    if ww <= _EXP_ARG_CAP:
        return eps * pref * exp(ww)
    return _exp_or_inf(log(eps) + log(pref) + ww)


def erfi_many(double[:] xs, double[:] out):
    """erfi over a 1-D buffer (used by the continuous-time checks)."""
    cdef Py_ssize_t i
    for i in range(xs.shape[0]):
        out[i] = erfi(xs[i])
    return out


def erfi_antideriv_many(double[:] xs, double[:] out):
    cdef Py_ssize_t i
    for i in range(xs.shape[0]):
        out[i] = erfi_antideriv(xs[i])
    return out
