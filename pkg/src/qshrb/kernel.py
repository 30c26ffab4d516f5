"""Kernel selection.

The compiled module is used when it was built and imports cleanly; setting
``QSHRB_PURE_PYTHON=1`` forces the pure-Python fallback.  Both expose the
same functions, documented in :mod:`qshrb._kernel_py`.
"""

import os

if os.environ.get("QSHRB_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION

c_iszero = _impl.c_iszero
c_neg = _impl.c_neg
c_add = _impl.c_add
c_sub = _impl.c_sub
c_mul = _impl.c_mul
lc_axpy = _impl.lc_axpy
lc_add = _impl.lc_add
lc_sub = _impl.lc_sub
lc_scale = _impl.lc_scale
lc_apply = _impl.lc_apply
lc_apply2 = _impl.lc_apply2
lc_splice = _impl.lc_splice
lc_filter = _impl.lc_filter
lc_relabel = _impl.lc_relabel

__all__ = [
    "IMPLEMENTATION",
    "c_iszero",
    "c_neg",
    "c_add",
    "c_sub",
    "c_mul",
    "lc_axpy",
    "lc_add",
    "lc_sub",
    "lc_scale",
    "lc_apply",
    "lc_apply2",
    "lc_splice",
    "lc_filter",
    "lc_relabel",
]
