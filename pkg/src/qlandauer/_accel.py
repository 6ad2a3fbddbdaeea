"""Backend switch for the compiled special-function kernels.

``QLANDAUER_BACKEND=numpy`` forces the vectorised numpy path.  Anything else
(or unset) uses numba when it can be imported.
"""
import os

BACKEND_ENV = "QLANDAUER_BACKEND"

try:
    import numba
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

_requested = os.environ.get(BACKEND_ENV, "numba").strip().lower() or "numba"
if _requested not in ("numba", "numpy"):
    raise ValueError(f"{BACKEND_ENV} must be 'numba' or 'numpy', got {_requested!r}")

USE_NUMBA = HAVE_NUMBA and _requested == "numba"
BACKEND = "numba" if USE_NUMBA else "numpy"


def njit(func):
    """``numba.njit(cache=True)`` if numba is importable, else identity."""
    if HAVE_NUMBA:
        return numba.njit(cache=True)(func)
    return func
