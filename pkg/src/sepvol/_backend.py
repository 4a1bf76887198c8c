"""Backend selection: compiled Cython kernels when available, NumPy otherwise.

``SEPVOL_BACKEND=python`` or ``SEPVOL_BACKEND=cython`` forces a choice
(raising if the compiled extension is missing); by default the compiled
backend is used when importable.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _kernels as _kernels_cy
except ImportError:
    _kernels_cy = None


def available() -> tuple[str, ...]:
    return ("python",) if _kernels_cy is None else ("cython", "python")


def get(name: str | None = None):
    """Return the kernel module for ``name`` (default: env var or best)."""
    if name is None:
        name = os.environ.get("SEPVOL_BACKEND")
    if name is None:
        return _kernels_cy if _kernels_cy is not None else _kernels_py
    if name == "python":
        return _kernels_py
    if name == "cython":
        if _kernels_cy is None:
            raise RuntimeError("compiled kernels requested but not built")
        return _kernels_cy
    raise ValueError(f"unknown backend {name!r}")
