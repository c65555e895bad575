"""Kernel backend selection.

Hot numeric kernels ship in two equivalent implementations: compiled numba
loops and a pure-numpy fallback. The active one is chosen by the
``MESHFLOW_BACKEND`` environment variable at import time:

* ``auto`` (default) - numba when importable, numpy otherwise
* ``numba``          - force numba; raises if numba is unavailable
* ``numpy``          - force the pure-numpy path

Both paths are contract-tested against each other; switching backends never
changes results, only speed. ``set_backend`` flips the choice at runtime,
which the benchmark harness uses to time one against the other.
"""

from __future__ import annotations

import os

_VALID = ("auto", "numba", "numpy")

try:
    import numba  # noqa: F401
    _HAVE_NUMBA = True
except ImportError:
    _HAVE_NUMBA = False

_backend = None


def _resolve(requested: str) -> str:
    if requested not in _VALID:
        raise ValueError(
            f"MESHFLOW_BACKEND must be one of {_VALID}, got {requested!r}")
    if requested == "numba" and not _HAVE_NUMBA:
        raise RuntimeError("MESHFLOW_BACKEND=numba but numba is not installed")
    if requested == "auto":
        return "numba" if _HAVE_NUMBA else "numpy"
    return requested


def active_backend() -> str:
    """Name of the backend currently in use: 'numba' or 'numpy'."""
    global _backend
    if _backend is None:
        _backend = _resolve(os.environ.get("MESHFLOW_BACKEND", "auto"))
    return _backend


def set_backend(name: str) -> str:
    """Force a backend at runtime. Returns the previous one."""
    global _backend
    prev = active_backend()
    _backend = _resolve(name)
    return prev


def have_numba() -> bool:
    return _HAVE_NUMBA
