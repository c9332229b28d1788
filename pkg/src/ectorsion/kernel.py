"""Selects the prime-field kernel implementation at import time.

Prefers the compiled extension and silently falls back to the pure-Python
twin when it is unavailable.  ``ECTORSION_PURE=1`` forces the fallback, which
the benchmark and the backend-agreement tests use.
"""

from __future__ import annotations

import os

from . import _purekernel

if os.environ.get("ECTORSION_PURE") == "1":
    _impl = _purekernel
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        _impl = _purekernel
        BACKEND = "python"

fp_is_square = _impl.fp_is_square
fp_sqrt = _impl.fp_sqrt
cubic_is_on = _impl.cubic_is_on
cubic_neg = _impl.cubic_neg
cubic_add = _impl.cubic_add
cubic_smul = _impl.cubic_smul
cubic_order = _impl.cubic_order
cubic_points = _impl.cubic_points
cubic_all_orders = _impl.cubic_all_orders
cubic_double_all = _impl.cubic_double_all
