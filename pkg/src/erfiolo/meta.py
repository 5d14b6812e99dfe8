"""Polar decomposition of the d-dimensional problem.

Direction is learned by projected online gradient descent on the unit ball
with the adaptive rate sqrt(2 / sum ||g||^2); magnitude is the 1D learner
projected to the nonnegative half-line.  The surrogate-loss rule below
keeps the magnitude learner's loss-sum floor intact, which is exactly what
makes the whole construction well-posed.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import base1d
from .base1d import BaseState, ContractViolation
from .potential import PotentialParams, comparator_shift


@dataclass(frozen=True)
class BallState:
    w: np.ndarray
    v_ball: float = 0.0


@dataclass(frozen=True)
class MetaState:
    base: BaseState
    ball: BallState
    dim: int


def fresh_state(dim):
    if dim < 1:
        raise ValueError("dimension must be positive, got %r" % (dim,))
    return MetaState(base=BaseState(), ball=BallState(w=np.zeros(dim)), dim=dim)


def project_ball(v, radius=1.0):
    """Euclidean projection onto the centered ball of the given radius."""
    n = math.sqrt(float(v @ v))
    if n <= radius:
        return v
    return v * (radius / n)


def ball_step(ball, g):
    """One adaptive-OGD step on the unit ball; zero gradients are no-ops."""
    if not isinstance(g, np.ndarray):
        g = np.asarray(g, dtype=float)
    gg = float(g @ g)
    v_new = ball.v_ball + gg
    if gg == 0.0:
        return BallState(w=ball.w, v_ball=v_new)
    eta = math.sqrt(2.0 / v_new)
    return BallState(w=project_ball(ball.w - eta * g), v_ball=v_new)


def predict_parts(state, hint, eps, alpha):
    """(raw magnitude, projected magnitude, direction) for this round."""
    y_tilde = base1d.base_predict(state.base, hint, eps, alpha)
    y = y_tilde if y_tilde > 0.0 else 0.0
    return y_tilde, y, state.ball.w


def compose_prediction(y, w):
    """x = y * w with the y = +inf saturation handled componentwise.

    When the magnitude saturates to infinity the correct limit of y * w
    keeps exact zeros at the zero components of w.
    """
    if math.isinf(y):
        out = np.zeros_like(w)
        mask = w != 0.0
        out[mask] = w[mask] * y
        return out
    return w * y


def meta_predict(state, hint, eps, alpha):
    """The d-dimensional prediction x_t."""
    _, y, w = predict_parts(state, hint, eps, alpha)
    return compose_prediction(y, w)


def meta_update(state, hint, g, eps, alpha, parts=None):
    """Fold the observed gradient into both sub-learners.

    Needs eps and alpha to recompute this round's raw prediction for the
    surrogate-loss rule; callers that already queried predict_parts this
    round can pass its result to skip the recomputation.  Raises
    ContractViolation if ||g|| exceeds the hint (callers without a
    Lipschitz bound must clip first — see the scale-free wrapper).
    """
    if not isinstance(g, np.ndarray):
        g = np.asarray(g, dtype=float)
    if g.shape != (state.dim,):
        raise ValueError("gradient shape %r, expected (%d,)" % (g.shape, state.dim))
    gnorm = math.sqrt(float(g @ g))
    if gnorm > hint * (1.0 + 1e-12):
        raise ContractViolation("gradient norm %g exceeds the hint %g" % (gnorm, hint))
    y_tilde, y, w = parts if parts is not None else predict_parts(state, hint, eps, alpha)
    l = float(g @ w)
    # l * y_tilde >= l * y  <=>  this round's loss is no better unprojected
    l_tilde = l if l * y_tilde >= l * y else 0.0
    base_new = base1d.base_update(state.base, hint, l_tilde)
    ball_new = ball_step(state.ball, g)
    return MetaState(base=base_new, ball=ball_new, dim=state.dim)


def meta_regret_bound(state, u, eps, alpha):
    """Anytime regret bound against the fixed comparator u.

    eps*sqrt(alpha*(V + z + k*S-bar)) + ||u||*(S-bar + 2*sqrt(2 V)) with V
    the direction learner's gradient variance and (k, z) from the last hint.
    """
    u = np.asarray(u, dtype=float)
    unorm = float(np.linalg.norm(u))
    V = state.ball.v_ball
    h = state.base.h_prev
    if h <= 0.0:
        # no scale information yet: only zero gradients were seen
        return 0.0
    p = PotentialParams(eps=eps, alpha=alpha, h=h)
    sbar = comparator_shift(unorm, V, eps, alpha, p.k, p.z)
    return eps * math.sqrt(alpha * (V + p.z + p.k * sbar)) + unorm * (
        sbar + 2.0 * math.sqrt(2.0 * V)
    )
