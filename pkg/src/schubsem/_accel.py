"""Optional numba acceleration.

Set ``SCHUBSEM_DISABLE_NUMBA=1`` to force the pure-numpy kernels even when
numba is importable.  The flag is read once, at import time.
"""

import os

_DISABLED = os.environ.get("SCHUBSEM_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError("numba disabled by SCHUBSEM_DISABLE_NUMBA")
    from numba import njit

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def _wrap(f):
            return f

        return _wrap


def backend() -> str:
    return "numba" if HAS_NUMBA else "numpy"
