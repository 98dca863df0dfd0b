"""Optional numba acceleration.

Kernels in :mod:`ordaut._kernels` are written in the subset of Python that
numba's nopython mode accepts, so the same source runs either compiled or
interpreted.  Set ``ORDAUT_NUMBA=0`` in the environment to force the
interpreted path (useful for debugging and for the benchmark).
"""
from __future__ import annotations

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and os.environ.get("ORDAUT_NUMBA", "1") != "0"


def kernel(fn):
    """Compile ``fn`` with ``numba.njit`` when acceleration is enabled."""
    if USE_NUMBA:
        return numba.njit(cache=True)(fn)
    return fn


def python_impl(fn):
    """Return the interpreted version of a (possibly compiled) kernel."""
    return getattr(fn, "py_func", fn)
