"""Lipschitz adaptivity without hints: running-max scale tracking plus
gradient clipping.

The wrapper predicts 0 until the first nonzero gradient fixes a scale.
From then on the running max G of observed gradient norms is both the hint
fed to the inner learner and the clipping level: the inner learner sees
g * G_prev / G_new, whose norm never exceeds the hint it was promised.
Scaling the whole gradient stream by c > 0 leaves every prediction
unchanged and multiplies losses by exactly c.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import meta
from .meta import MetaState


@dataclass(frozen=True)
class ClipState:
    inner: MetaState
    g_max: float = 0.0
    started: bool = False
    t: int = 0


def fresh_state(dim):
    return ClipState(inner=meta.fresh_state(dim))


def clip_predict(state, eps, alpha):
    """Prediction of the wrapped learner; 0 before any scale is known."""
    if not state.started:
        return np.zeros(state.inner.dim)
    return meta.meta_predict(state.inner, state.g_max, eps, alpha)


def clip_update(state, g, eps, alpha, parts=None):
    """Absorb a gradient, clipping it to the previous running max.

    parts, when given, must be this round's meta.predict_parts output for
    the inner learner; it is ignored on the bootstrap round, whose hint
    only becomes known with the gradient itself.
    """
    if not isinstance(g, np.ndarray):
        g = np.asarray(g, dtype=float)
    gnorm = math.sqrt(float(g @ g))
    if not state.started:
        if gnorm == 0.0:
            return ClipState(inner=state.inner, g_max=0.0, started=False, t=state.t + 1)
        # bootstrap: the first nonzero gradient defines the scale, and the
        # ratio G_prev/G_new is taken as 1 so the gradient passes unclipped
        inner = meta.meta_update(state.inner, gnorm, g, eps, alpha)
        return ClipState(inner=inner, g_max=gnorm, started=True, t=state.t + 1)
    g_prev = state.g_max
    g_new = max(g_prev, gnorm)
    g_clipped = g * (g_prev / g_new)
    inner = meta.meta_update(state.inner, g_prev, g_clipped, eps, alpha, parts=parts)
    return ClipState(inner=inner, g_max=g_new, started=True, t=state.t + 1)


def clip_regret_bound(state, u, eps, alpha):
    """Bound on the wrapper's regret measured against the clipped stream."""
    if not state.started:
        return 0.0
    return meta.meta_regret_bound(state.inner, u, eps, alpha)


def bounded_domain_predict(state, D, eps, alpha):
    """Clip-wrapper prediction projected onto the radius-D ball."""
    if not (D > 0.0):
        raise ValueError("domain radius must be positive, got %r" % (D,))
    x = clip_predict(state, eps, alpha)
    if not np.all(np.isfinite(x)):
        # saturated magnitude: the projection of an infinite multiple of w
        w = state.inner.ball.w
        wnorm = float(np.linalg.norm(w))
        if wnorm == 0.0:
            return np.zeros(state.inner.dim)
        return w * (D / wnorm)
    return meta.project_ball(x, D)


def bounded_domain_regret_bound(state, D, u, eps, alpha):
    """True-gradient regret bound for the projected variant.

    Valid for comparators with ||u|| <= D: the clipped-stream bound plus
    2*D*G for the clipping error, G being the running max gradient norm.
    """
    unorm = float(np.linalg.norm(np.asarray(u, dtype=float)))
    if unorm > D * (1.0 + 1e-12):
        return math.inf
    return clip_regret_bound(state, u, eps, alpha) + 2.0 * D * state.g_max
