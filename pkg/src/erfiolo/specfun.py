"""Scaled imaginary error function erfi(x) = int_0^x exp(u^2) du, its
antiderivative, and its inverse.

These are the numerical bedrock of the potential: erfi gives predictions,
the antiderivative gives potential values, and the inverse appears in the
comparator-norm estimates.  Everything is odd/even by construction, so
negative arguments are exact reflections.
"""

import math

from . import _backend

X_MAX = 26.0


def erfi(x):
    """int_0^x exp(u^2) du.

    Odd, strictly increasing, erfi(0) = 0.  Raises OverflowError once
    exp(x^2) would leave double range (|x| > X_MAX).
    """
    if not math.isfinite(x):
        raise ValueError("erfi: argument must be finite, got %r" % x)
    return _backend.K.erfi(x)


def erfi_antideriv(w):
    """int_0^w erfi(u) du, computed as w*erfi(w) - (exp(w^2)-1)/2.

    Even in w (antiderivative of an odd function).
    """
    if not math.isfinite(w):
        raise ValueError("erfi_antideriv: argument must be finite, got %r" % w)
    return _backend.K.erfi_antideriv(w)


def dawson(x):
    """Dawson integral exp(-x^2)*erfi(x); finite for every finite x."""
    if not math.isfinite(x):
        raise ValueError("dawson: argument must be finite, got %r" % x)
    return _backend.K.dawson(x)


def erfi_inv(y):
    """Inverse of erfi, extended to negative y by oddness.

    Safeguarded Newton iteration inside the bracket [0, 1 + sqrt(log(y+1))]
    (the upper end is a proved bound on the root), falling back to bisection
    whenever a Newton step leaves the bracket.  Terminates when
    |erfi(x) - y| <= 1e-12 * max(1, y).
    """
    if not math.isfinite(y):
        raise ValueError("erfi_inv: argument must be finite, got %r" % y)
    if y == 0.0:
        return 0.0
    ay = abs(y)
    tol = 1e-12 * max(1.0, ay)
    lo = 0.0
    hi = 1.0 + math.sqrt(math.log1p(ay))
    if hi > X_MAX:
        if ay > _backend.K.erfi(X_MAX):
            raise OverflowError("erfi_inv: %g is beyond erfi(X_MAX)" % y)
        hi = X_MAX
    x = min(ay, hi)  # erfi(x) >= x, so the root is <= ay as well
    for _ in range(200):
        fx = _backend.K.erfi(x) - ay
        if abs(fx) <= tol:
            break
        if fx > 0.0:
            hi = x
        else:
            lo = x
        step = fx * math.exp(-x * x)  # f'(x) = exp(x^2)
        x_new = x - step
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
        if x_new == x:
            break
        x = x_new
    return x if y > 0.0 else -x
