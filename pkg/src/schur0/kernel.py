"""Kernel backend selection.

The compiled extension is used when it was built; otherwise (or when
``SCHUR0_PURE_PYTHON=1``) the pure-Python module is used.  Both expose the
same functions with identical results.
"""

import os

from . import _pykernel

if os.environ.get("SCHUR0_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernel
    BACKEND = "python"
else:
    try:
        from . import _ckernel as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernel
        BACKEND = "python"

left_e = _impl.left_e
left_f = _impl.left_f
right_e = _impl.right_e
right_f = _impl.right_f
row_sums = _impl.row_sums
col_sums = _impl.col_sums
e_degree = _impl.e_degree
f_degree = _impl.f_degree
s0_product = _impl.s0_product
star_product = _impl.star_product
assoc_violation = _impl.assoc_violation

__all__ = [
    "BACKEND", "left_e", "left_f", "right_e", "right_f", "row_sums",
    "col_sums", "e_degree", "f_degree", "s0_product", "star_product",
    "assoc_violation",
]
