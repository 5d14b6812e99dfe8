"""Adversarial and stochastic gradient-stream generators for the harness.

Every stream obeys ||g_t|| <= scale(t) with a nondecreasing scale schedule
(the hinted setting needs both), and is fully determined by its spec and
seed.  Random streams are materialized up front from a single generator so
that shorter horizons are exact prefixes of longer ones.
"""

import math
from dataclasses import dataclass, field

import numpy as np

KINDS = (
    "sign_adversary",
    "constant_direction",
    "alternating",
    "gaussian_iid",
    "varying_scale",
    "sparse_bursts",
)

# varying_scale doubles at these rounds, exercising hint growth
DOUBLING_ROUNDS = (10, 100, 1000)


@dataclass(frozen=True)
class EnvSpec:
    kind: str
    dim: int
    seed: int
    scale: float = 1.0
    burst_rate: float = 0.05  # sparse_bursts only

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError("unknown environment kind %r (one of %s)" % (self.kind, ", ".join(KINDS)))
        if self.dim < 1:
            raise ValueError("dim must be positive, got %r" % (self.dim,))
        if not (self.scale > 0.0):
            raise ValueError("scale must be positive, got %r" % (self.scale,))
        if not (0.0 < self.burst_rate <= 1.0):
            raise ValueError("burst_rate must lie in (0, 1], got %r" % (self.burst_rate,))

    def scale_at(self, t):
        """Max gradient norm allowed in round t (1-based); nondecreasing."""
        if self.kind == "varying_scale":
            return self.scale * 2.0 ** sum(1 for r in DOUBLING_ROUNDS if t >= r)
        return self.scale


@dataclass
class EnvStream:
    """A materialized environment: deterministic state for one run."""

    spec: EnvSpec
    horizon: int
    _dirs: np.ndarray = field(default=None, repr=False)
    _mags: np.ndarray = field(default=None, repr=False)
    _active: np.ndarray = field(default=None, repr=False)


def make_env(spec, horizon):
    """Materialize the random part of a stream for rounds 1..horizon."""
    stream = EnvStream(spec=spec, horizon=horizon)
    if spec.kind in ("gaussian_iid", "sparse_bursts"):
        rng = np.random.default_rng(spec.seed)
        raw = rng.standard_normal((horizon, spec.dim))
        norms = np.linalg.norm(raw, axis=1)
        norms[norms == 0.0] = 1.0
        stream._dirs = raw / norms[:, None]
        if spec.kind == "gaussian_iid":
            stream._mags = rng.uniform(0.0, 1.0, horizon)
        else:
            stream._active = rng.uniform(0.0, 1.0, horizon) < spec.burst_rate
    return stream


def env_next(stream, t, x_t):
    """Gradient for round t (1-based); the adversary sees the prediction x_t."""
    spec = stream.spec
    if not (1 <= t <= stream.horizon):
        raise ValueError("round %d outside materialized horizon %d" % (t, stream.horizon))
    s = spec.scale_at(t)
    if spec.kind == "sign_adversary":
        d = _unit_or_none(np.asarray(x_t, dtype=float))
        if d is None:
            d = _e1(spec.dim)
        return s * d
    if spec.kind in ("constant_direction", "varying_scale"):
        return s * _e1(spec.dim)
    if spec.kind == "alternating":
        return (s if t % 2 == 1 else -s) * _e1(spec.dim)
    if spec.kind == "gaussian_iid":
        return (s * stream._mags[t - 1]) * stream._dirs[t - 1]
    # sparse_bursts
    if stream._active[t - 1]:
        return s * stream._dirs[t - 1]
    return np.zeros(spec.dim)


def _e1(dim):
    e = np.zeros(dim)
    e[0] = 1.0
    return e


def _unit_or_none(x):
    """Direction of x, or None when x = 0; exact for saturated (inf) inputs.

    An infinite x arises only as the limit of y*w with y -> +inf, so the
    finite components are negligible and the limiting direction is the
    normalized sign pattern of the infinite ones.
    """
    inf_mask = np.isinf(x)
    if inf_mask.any():
        v = np.where(inf_mask, np.sign(x), 0.0)
        return v / np.linalg.norm(v)
    n = float(np.linalg.norm(x))
    if n == 0.0:
        return None
    return x / n


def best_fixed_comparator(gradients, radius):
    """argmin over ||u|| <= radius of sum_t <g_t, u>: the scaled negative
    direction of the gradient sum, or 0 when the gradients cancel exactly."""
    if not (radius > 0.0):
        raise ValueError("radius must be positive, got %r" % (radius,))
    gsum = np.sum(np.asarray(gradients, dtype=float), axis=0)
    n = float(np.linalg.norm(gsum))
    if n == 0.0:
        return np.zeros_like(gsum)
    return gsum * (-radius / n)
