"""Kernel backend selection.

The compiled extension (``erfiolo._ckernels``) and the pure-Python module
(``erfiolo._pykernels``) expose the same functions with the same semantics.
The compiled one is preferred when importable; set ``ERFIOLO_BACKEND=py``
or ``=c`` to force a choice.  ``K`` is looked up per call by the rest of
the package, so tests and the benchmark can swap it at runtime.
"""

import os

from . import _pykernels

_FORCED = os.environ.get("ERFIOLO_BACKEND", "").strip().lower()

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

if _FORCED == "py":
    K = _pykernels
elif _FORCED == "c":
    if _ckernels is None:
        raise ImportError("ERFIOLO_BACKEND=c but the compiled kernels are not built")
    K = _ckernels
else:
    K = _ckernels if _ckernels is not None else _pykernels


def backend_name():
    return "c" if K is _ckernels else "py"


def available_backends():
    out = {"py": _pykernels}
    if _ckernels is not None:
        out["c"] = _ckernels
    return out


def get_backend(name):
    try:
        return available_backends()[name]
    except KeyError:
        raise ValueError("unknown or unbuilt backend %r" % name) from None


class use_backend:
    """Context manager forcing a backend for the duration of a block."""

    def __init__(self, name):
        self._new = get_backend(name)
        self._old = None

    def __enter__(self):
        global K
        self._old = K
        K = self._new
        return self._new

    def __exit__(self, *exc):
        global K
        K = self._old
        return False
