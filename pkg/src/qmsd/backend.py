"""Kernel backend selection.

The hot reduction kernels exist twice: a numba @njit version and a pure
numpy twin. The environment variable QMSD_BACKEND selects one:

    QMSD_BACKEND=numba   force numba (error if unavailable)
    QMSD_BACKEND=numpy   force the numpy fallback

Unset, numba is used when importable.
"""

from __future__ import annotations

import os

_NUMBA_OK = False
try:
    import numba  # noqa: F401
    _NUMBA_OK = True
except ImportError:
    pass


def backend_name() -> str:
    """Resolve the active backend from the environment (read each call,
    so tests can flip it)."""
    choice = os.environ.get("QMSD_BACKEND", "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not _NUMBA_OK:
            raise RuntimeError("QMSD_BACKEND=numba but numba is not importable")
        return "numba"
    if choice:
        raise ValueError(f"unknown QMSD_BACKEND {choice!r}; use 'numba' or 'numpy'")
    return "numba" if _NUMBA_OK else "numpy"


def use_numba() -> bool:
    return backend_name() == "numba"
