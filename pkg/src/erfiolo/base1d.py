"""The 1D magnitude learner.

State is (V~, S~): running surrogate variance and the negated surrogate
loss sum.  Each round reads the prediction off the potential's S-derivative
and folds the received surrogate loss back in.  The driver (the polar
decomposition layer) guarantees S~ never drops below -h; this module treats
any breach as a caller bug and raises instead of clamping.
"""

from dataclasses import dataclass

from . import _backend
from .potential import PotentialParams, comparator_shift, theorem_z

import math


class ContractViolation(RuntimeError):
    """An input contract that the surrounding algorithm proves impossible."""


@dataclass(frozen=True)
class BaseState:
    v_tilde: float = 0.0
    s_tilde: float = 0.0
    h_prev: float = 0.0  # 0.0 until the first accepted hint
    t: int = 0


def _check_hint(state, hint):
    if not (hint > 0.0) or not math.isfinite(hint):
        raise ValueError("hint must be positive and finite, got %r" % (hint,))
    if state.h_prev > 0.0 and hint < state.h_prev:
        raise ContractViolation(
            "hints must be nondecreasing: got %g after %g" % (hint, state.h_prev)
        )


def base_predict(state, hint, eps, alpha):
    """Raw (possibly negative) magnitude prediction for the coming round."""
    _check_hint(state, hint)
    if not (eps > 0.0 and alpha > 0.5):
        raise ValueError("need eps > 0 and alpha > 1/2")
    k = 2.0 * hint
    z = theorem_z(alpha, hint)
    return _backend.K.bigphi_d2(state.v_tilde, state.s_tilde, eps, alpha, k, z)


def base_update(state, hint, l_tilde):
    """Absorb the surrogate loss gradient l_tilde under the given hint."""
    _check_hint(state, hint)
    if abs(l_tilde) > hint * (1.0 + 1e-12):
        raise ContractViolation(
            "surrogate loss %g exceeds the hint %g" % (l_tilde, hint)
        )
    s_new = state.s_tilde - l_tilde
    if s_new < -hint * (1.0 + 1e-12):
        raise ContractViolation(
            "surrogate loss sum would pass the floor: S~=%g < -h=%g" % (s_new, -hint)
        )
    return BaseState(
        v_tilde=state.v_tilde + l_tilde * l_tilde,
        s_tilde=s_new,
        h_prev=hint,
        t=state.t + 1,
    )


def base_regret_bound(state, u_tilde, eps, alpha):
    """Anytime regret bound of the magnitude learner against u_tilde >= 0."""
    if u_tilde < 0.0:
        raise ValueError("comparator magnitude must be nonnegative, got %g" % u_tilde)
    h = state.h_prev
    if h <= 0.0:
        return 0.0  # no rounds played yet
    p = PotentialParams(eps=eps, alpha=alpha, h=h)
    sbar = comparator_shift(u_tilde, state.v_tilde, eps, alpha, p.k, p.z)
    return (
        eps * math.sqrt(alpha * (state.v_tilde + p.z + p.k * sbar)) + u_tilde * sbar
    )
