"""The erfi potential driving the 1D learner.

phi(x, y) = eps * sqrt(alpha*x) * (2 * int_0^{y/sqrt(4 alpha x)} erfi(u) du - 1)

solves the backward heat equation d1 phi + alpha * d22 phi = 0, and the
learner's per-round potential is the shifted

    Phi(V, S) = phi(V + z + k*S, S)

with k = 2*h and z = (12*alpha + 4) / (2*alpha - 1) * h^2 for the current
hint h.  Those choices make the one-step inequality

    Phi_t(V + c^2, S + c) - Phi_{t-1}(V, S) - c * d2 Phi_t(V, S) <= 0

hold for every admissible (V, S, c), which is what `verify_one_step`
evaluates pointwise.  `conjugate_bound` is the matching closed-form upper
bound on sup_S [u*S - Phi(V, S)].
"""

import math
from dataclasses import dataclass

from . import _backend


def theorem_z(alpha, h):
    """The z = (12*alpha + 4)/(2*alpha - 1) * h^2 schedule."""
    return (12.0 * alpha + 4.0) / (2.0 * alpha - 1.0) * (h * h)


@dataclass(frozen=True)
class PotentialParams:
    """Hyperparameters (eps, alpha) plus the hint-derived shifts (k, z).

    k and z default to the schedule that certifies the one-step bound;
    passing them explicitly is only useful to exercise the domain guard.
    """

    eps: float
    alpha: float
    h: float
    k: float = None
    z: float = None

    def __post_init__(self):
        if not (self.eps > 0.0):
            raise ValueError("eps must be positive, got %r" % (self.eps,))
        if not (self.alpha > 0.5):
            raise ValueError("alpha must exceed 1/2, got %r" % (self.alpha,))
        if not (self.h > 0.0):
            raise ValueError("hint must be positive, got %r" % (self.h,))
        if self.k is None:
            object.__setattr__(self, "k", 2.0 * self.h)
        if self.z is None:
            object.__setattr__(self, "z", theorem_z(self.alpha, self.h))
        if not (self.z > self.k * self.h):
            raise ValueError(
                "potential shift too small: need z > k*h, got z=%g k*h=%g"
                % (self.z, self.k * self.h)
            )


@dataclass(frozen=True)
class PotentialPoint:
    """A (running variance, negated loss sum) state the potential is read at."""

    V: float
    S: float


def phi(x, y, eps, alpha):
    """The base potential; requires x > 0."""
    return _backend.K.phi(x, y, eps, alpha)


def phi_partials(x, y, eps, alpha):
    """Closed forms of (d1, d2, d11, d12, d22) phi at (x, y)."""
    return _backend.K.phi_partials(x, y, eps, alpha)


def Phi(params, p):
    """Phi(V, S) = phi(V + z + k*S, S)."""
    return _backend.K.bigphi(p.V, p.S, params.eps, params.alpha, params.k, params.z)


def Phi_d2(params, p):
    """dPhi/dS: the raw prediction value.  Negative whenever S <= 0."""
    return _backend.K.bigphi_d2(p.V, p.S, params.eps, params.alpha, params.k, params.z)


def Phi_d22(params, p):
    """d2Phi/dS2; strictly positive on V >= 0, S >= -h (convexity in S)."""
    return _backend.K.bigphi_d22(p.V, p.S, params.eps, params.alpha, params.k, params.z)


_RANGE_SLOP = 1e-9


def verify_one_step(params_prev, params_cur, V, S, c):
    """Left-hand side of the one-step potential inequality.

    Returns Phi_cur(V + c^2, S + c) - Phi_prev(V, S) - c * d2 Phi_cur(V, S);
    nonpositive (up to rounding) whenever the preconditions hold.  Malformed
    grid points raise ValueError so they cannot masquerade as violations.
    """
    if params_prev.eps != params_cur.eps or params_prev.alpha != params_cur.alpha:
        raise ValueError("one-step check requires shared eps and alpha")
    if params_cur.h < params_prev.h:
        raise ValueError("hints must be nondecreasing: %g < %g" % (params_cur.h, params_prev.h))
    if V < 0.0:
        raise ValueError("V must be nonnegative, got %g" % V)
    if S < -params_prev.h - _RANGE_SLOP:
        raise ValueError("S below -h_prev: S=%g h_prev=%g" % (S, params_prev.h))
    lo = -params_cur.h - min(S, 0.0)
    if not (lo - _RANGE_SLOP <= c <= params_cur.h + _RANGE_SLOP):
        raise ValueError("c=%g outside admissible [%g, %g]" % (c, lo, params_cur.h))
    K = _backend.K
    eps, alpha = params_cur.eps, params_cur.alpha
    after = K.bigphi(V + c * c, S + c, eps, alpha, params_cur.k, params_cur.z)
    before = K.bigphi(V, S, eps, alpha, params_prev.k, params_prev.z)
    slope = K.bigphi_d2(V, S, eps, alpha, params_cur.k, params_cur.z)
    return after - before - c * slope


def comparator_shift(u, V, eps, alpha, k, z):
    """The S-bar estimate of where the conjugate supremum sits.

    S-bar = 4*alpha*k*q^2 + sqrt(4*alpha*(V + z)) * q  with
    q = 1 + sqrt(log(2*u/eps + 1)); u must be nonnegative.
    """
    if u < 0.0:
        raise ValueError("comparator magnitude must be nonnegative, got %g" % u)
    q = 1.0 + math.sqrt(math.log1p(2.0 * u / eps))
    return 4.0 * alpha * k * q * q + math.sqrt(4.0 * alpha * (V + z)) * q


def conjugate_bound(params, V, u):
    """Closed-form upper bound on sup_{S >= -h} [u*S - Phi(V, S)] for u >= 0."""
    sbar = comparator_shift(u, V, params.eps, params.alpha, params.k, params.z)
    return u * sbar + params.eps * math.sqrt(
        params.alpha * (V + params.z + params.k * sbar)
    )
