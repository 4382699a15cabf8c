"""Kernel selection: compiled row reduction when available, pure Python otherwise.

Set ``ARRDMOD_PURE=1`` to force the pure-Python kernels (used by the
benchmark and by the parity tests).
"""

from __future__ import annotations

import os

from arrdmod import _rref_py

if os.environ.get("ARRDMOD_PURE") == "1":
    _impl = _rref_py
else:
    try:
        from arrdmod import _rref_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _rref_py

rref_scaled = _impl.rref_scaled
pivot_columns = _impl.pivot_columns


def backend() -> str:
    """Name of the active kernel backend: ``"compiled"`` or ``"pure"``."""
    return "pure" if _impl is _rref_py else "compiled"
