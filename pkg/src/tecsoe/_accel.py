"""Numba switch.

Kernels are written once in the numba-compatible subset of Python. With
numba installed they are also compiled with ``@njit``; the compiled form is
the default unless ``TECSOE_DISABLE_NUMBA`` is set, in which case the plain
numpy form runs.
"""

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

DISABLE_ENV = "TECSOE_DISABLE_NUMBA"

HAVE_NUMBA = numba is not None


def numba_enabled():
    return HAVE_NUMBA and os.environ.get(DISABLE_ENV, "").lower() not in ("1", "true", "yes", "on")


def compile_kernel(fn):
    """Return the njit-compiled twin of *fn*, or None without numba."""
    if not HAVE_NUMBA:
        return None
    return numba.njit(cache=True, nogil=True)(fn)
