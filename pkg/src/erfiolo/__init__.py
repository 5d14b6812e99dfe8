"""Simultaneously gradient- and comparator-adaptive online linear
optimization, built on the erfi potential.

The learner needs no learning rate and no prior bound on the comparator;
its regret against any fixed point u scales with the realized gradient
variance sqrt(V_T) and with ||u|| up to a log factor.  Subpackages:

  specfun    erfi, its antiderivative and inverse
  potential  the potential, its derivatives, one-step and conjugate checks
  base1d     the 1D magnitude learner
  meta       polar decomposition: ball OGD direction x 1D magnitude
  scalefree  unknown-Lipschitz wrapper (running-max hints + clipping)
  envs       benchmark gradient streams and comparators
  ctsim      continuous-time analogue with pathwise bound checks
  harness    experiment runner, traces, lemma verification, CLI backend

Hot kernels live in a compiled extension when built, with a pure-Python
fallback selected automatically at import (see erfiolo._backend).
"""

from ._backend import backend_name
from . import base1d, ctsim, envs, harness, meta, potential, scalefree, specfun

__version__ = "0.1.0"

__all__ = [
    "backend_name",
    "base1d",
    "ctsim",
    "envs",
    "harness",
    "meta",
    "potential",
    "scalefree",
    "specfun",
    "__version__",
]
