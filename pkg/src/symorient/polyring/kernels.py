"""Backend selection for the polynomial kernels.

The compiled extension is used when it was built and imports cleanly;
setting ``SYMORIENT_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

if os.environ.get("SYMORIENT_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND
mul_terms = _impl.mul_terms
add_scaled = _impl.add_scaled
reduce_terms = _impl.reduce_terms
bilinear_reduce = _impl.bilinear_reduce
find_divisor = _impl.find_divisor
divides = _impl.divides

__all__ = [
    "BACKEND",
    "mul_terms",
    "add_scaled",
    "reduce_terms",
    "bilinear_reduce",
    "find_divisor",
    "divides",
]
