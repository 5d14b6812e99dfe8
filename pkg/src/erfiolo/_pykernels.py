"""Pure-Python scalar kernels: erfi-family special functions and the
potential evaluations sitting in every hot loop.

This module is the fallback twin of the compiled ``_ckernels`` extension.
The two implementations keep the *same* operation order so that results
agree to the last few ulps (the extension is compiled with FP contraction
disabled for this reason).  Any change here must be mirrored there.

Conventions:
  erfi(x)  = integral of exp(u^2) for u in [0, x]   (no sqrt(pi)/2 factor)
  dawson(x) = exp(-x^2) * erfi(x)
  phi(x, y) = eps * sqrt(alpha*x) * (2 * int_0^{y/sqrt(4 alpha x)} erfi - 1)
"""

import math

# exp(x^2) overflows IEEE doubles just past x = 26.6; refuse earlier.
X_MAX = 26.0
# switch to log-domain evaluation once the exponent passes this
EXP_ARG_CAP = 500.0
LOG_DBL_MAX = 709.782712893384
_SQRT_PI = 1.7724538509055160273

_SERIES_CUT = 3.0  # Maclaurin series below, Dawson-based identity above

# Sampling-theorem evaluation of the Dawson integral (Rybicki's method):
# dawson(x) ~ (1/sqrt(pi)) * sum over odd m of exp(-(x - m*h)^2) / m.
# With h = 0.2 the discretization error is exp(-(pi/(2h))^2) ~ 1e-27 and
# truncating at |m*h - x| ~ 7 keeps the tail below 1e-21.
_RYB_H = 0.2
_RYB_TERMS = 18  # odd offsets 1, 3, ..., 35
_RYB_EXPTAB = tuple(math.exp(-((2 * j + 1) * _RYB_H) ** 2) for j in range(_RYB_TERMS))


def _erfi_series(ax):
    # all terms positive: no cancellation, ~x^2 + spread iterations
    s = ax
    term = ax
    xx = ax * ax
    k = 1
    while k < 400:
        term = term * xx / k
        contrib = term / (2 * k + 1)
        s += contrib
        if contrib <= 1e-17 * s:
            break
        k += 1
    return s


def _dawson_large(ax):
    # valid for ax > _SERIES_CUT (no small-denominator issues there)
    n0 = 2.0 * math.floor(ax / (2.0 * _RYB_H) + 0.5)
    xp = ax - n0 * _RYB_H
    e1 = math.exp(2.0 * xp * _RYB_H)
    e2 = e1 * e1
    fp = e1
    fm = 1.0 / e1
    s = 0.0
    for j in range(_RYB_TERMS):
        m = 2 * j + 1
        s += _RYB_EXPTAB[j] * (fp / (n0 + m) + fm / (n0 - m))
        fp *= e2
        fm /= e2
    return math.exp(-xp * xp) * s / _SQRT_PI


def dawson(x):
    """Dawson integral exp(-x^2) * int_0^x exp(u^2) du, any finite x."""
    ax = abs(x)
    if ax <= _SERIES_CUT:
        d = _erfi_series(ax) * math.exp(-ax * ax)
    else:
        d = _dawson_large(ax)
    return d if x >= 0.0 else -d


def erfi(x):
    """int_0^x exp(u^2) du.  Raises OverflowError for |x| > X_MAX."""
    ax = abs(x)
    if ax <= _SERIES_CUT:
        v = _erfi_series(ax)
    elif ax <= X_MAX:
        v = math.exp(ax * ax) * _dawson_large(ax)
    else:
        raise OverflowError("erfi argument %g exceeds overflow guard %g" % (x, X_MAX))
    return v if x >= 0.0 else -v


def erfi_antideriv(w):
    """int_0^w erfi(u) du = w*erfi(w) - (exp(w^2)-1)/2; even in w."""
    aw = abs(w)
    if aw <= _SERIES_CUT:
        return aw * _erfi_series(aw) - 0.5 * math.expm1(aw * aw)
    if aw <= X_MAX:
        # exp(w^2)*(w*D(w) - 1/2) + 1/2 avoids forming two huge near-equal terms
        return math.exp(aw * aw) * (aw * _dawson_large(aw) - 0.5) + 0.5
    raise OverflowError("erfi_antideriv argument %g exceeds overflow guard %g" % (w, X_MAX))


def _exp_or_inf(logmag):
    if logmag > LOG_DBL_MAX:
        return math.inf
    return math.exp(logmag)


def phi(x, y, eps, alpha):
    """The base potential eps*sqrt(alpha x)*(2*int_0^{y/sqrt(4 alpha x)} erfi - 1)."""
    if x <= 0.0:
        raise ValueError("phi: first argument must be positive, got %g" % x)
    w = y / math.sqrt(4.0 * alpha * x)
    ww = w * w
    if ww <= EXP_ARG_CAP:
        return eps * math.sqrt(alpha * x) * (2.0 * erfi_antideriv(w) - 1.0)
    # 2*A(w) - 1 == exp(w^2) * (2 w D(w) - 1), positive once |w| > 0.93
    g = 2.0 * abs(w) * _dawson_large(abs(w)) - 1.0
    logmag = math.log(eps) + 0.5 * math.log(alpha * x) + ww + math.log(g)
    return _exp_or_inf(logmag)


def phi_partials(x, y, eps, alpha):
    """All five partial derivatives of phi at (x, y): (d1, d2, d11, d12, d22)."""
    if x <= 0.0:
        raise ValueError("phi_partials: first argument must be positive, got %g" % x)
    sx = math.sqrt(x)
    sa = math.sqrt(alpha)
    w = y / math.sqrt(4.0 * alpha * x)
    ww = w * w
    if ww <= EXP_ARG_CAP:
        e = math.exp(ww)
        d1 = -(eps * sa) / (2.0 * sx) * e
        d2 = eps * erfi(w)
        d11 = (eps * sa) / (4.0 * x * sx) * (2.0 * ww + 1.0) * e
        d12 = -(eps * y) / (4.0 * sa * x * sx) * e
        d22 = eps / (2.0 * sa * sx) * e
        return d1, d2, d11, d12, d22
    # log-domain: every partial is (finite prefactor) * exp(w^2)
    dw = dawson(w)
    le = math.log(eps)
    d1 = -_exp_or_inf(le + math.log(sa / (2.0 * sx)) + ww)
    d2 = math.copysign(_exp_or_inf(le + math.log(abs(dw)) + ww), dw)
    d11 = _exp_or_inf(le + math.log(sa * (2.0 * ww + 1.0) / (4.0 * x * sx)) + ww)
    d12 = -math.copysign(_exp_or_inf(le + math.log(abs(y) / (4.0 * sa * x * sx)) + ww), y)
    d22 = _exp_or_inf(le + math.log(1.0 / (2.0 * sa * sx)) + ww)
    return d1, d2, d11, d12, d22


def bigphi(V, S, eps, alpha, k, z):
    """Shifted potential Phi(V, S) = phi(V + z + k*S, S)."""
    x = V + z + k * S
    if x <= 0.0:
        raise ValueError("potential domain violated: V + z + k*S = %g <= 0" % x)
    return phi(x, S, eps, alpha)


def bigphi_d2(V, S, eps, alpha, k, z):
    """d/dS of Phi: the raw prediction eps*erfi(w) - eps*k*sqrt(alpha)/(2 sqrt(x)) * exp(w^2).

    Evaluated in factored form eps*exp(w^2)*(dawson(w) - k sqrt(alpha)/(2 sqrt(x)))
    once the exponent is large; overflow saturates to a signed infinity so
    downstream IEEE arithmetic stays NaN-free.
    """
    x = V + z + k * S
    if x <= 0.0:
        raise ValueError("potential domain violated: V + z + k*S = %g <= 0" % x)
    sx = math.sqrt(x)
    w = S / math.sqrt(4.0 * alpha * x)
    ww = w * w
    if ww <= EXP_ARG_CAP:
        return eps * erfi(w) - eps * k * math.sqrt(alpha) / (2.0 * sx) * math.exp(ww)
    bracket = dawson(w) - k * math.sqrt(alpha) / (2.0 * sx)
    if bracket == 0.0:
        return 0.0
    logmag = math.log(eps) + ww + math.log(abs(bracket))
    return math.copysign(_exp_or_inf(logmag), bracket)


def bigphi_d22(V, S, eps, alpha, k, z):
    """Second S-derivative of Phi; strictly positive on the valid domain."""
    x = V + z + k * S
    if x <= 0.0:
        raise ValueError("potential domain violated: V + z + k*S = %g <= 0" % x)
    sx = math.sqrt(x)
    w = S / math.sqrt(4.0 * alpha * x)
    ww = w * w
    pref = math.sqrt(alpha) / (4.0 * x * sx) * (2.0 * k * k * ww + k * k + 2.0 * (V + z) / alpha)
    if ww <= EXP_ARG_CAP:
        return eps * pref * math.exp(ww)
    return _exp_or_inf(math.log(eps) + math.log(pref) + ww)


def erfi_many(xs, out):
    """erfi over a 1-D buffer (used by the continuous-time checks)."""
    for i in range(len(xs)):
        out[i] = erfi(xs[i])
    return out


def erfi_antideriv_many(xs, out):
    for i in range(len(xs)):
        out[i] = erfi_antideriv(xs[i])
    return out
