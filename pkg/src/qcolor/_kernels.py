"""Kernel backend selection.

The compiled ``_core`` extension is used when it imports; otherwise the
pure-Python ``_pycore`` module.  Setting ``QCOLOR_PURE_PYTHON=1`` forces the
fallback.
"""

from __future__ import annotations

import os

from . import _pycore

if os.environ.get("QCOLOR_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pycore
    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _pycore
        BACKEND = "python"

knapsack_max = _impl.knapsack_max
optimize = _impl.optimize
enumerate_colorings = _impl.enumerate_colorings

__all__ = ["BACKEND", "knapsack_max", "optimize", "enumerate_colorings"]
