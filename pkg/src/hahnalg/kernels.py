"""Backend selection for the F2 support kernels.

The compiled extension is used when it was built; set ``HAHNALG_PURE_PYTHON=1``
to force the fallback. Numerators too large for 64-bit integers are routed to
the fallback per call.
"""

import os

from . import _pykernels

BACKEND = "python"
_fast = None

if not os.environ.get("HAHNALG_PURE_PYTHON"):
    try:
        from . import _kernels as _fast
    except ImportError:
        _fast = None
    else:
        BACKEND = "cython"


if _fast is None:
    xor_merge = _pykernels.xor_merge
    mul_mod2 = _pykernels.mul_mod2
else:

    def xor_merge(a, b):
        try:
            return _fast.xor_merge(a, b)
        except OverflowError:
            return _pykernels.xor_merge(a, b)

    def mul_mod2(a, b, cap=None):
        try:
            return _fast.mul_mod2(a, b, cap)
        except OverflowError:
            return _pykernels.mul_mod2(a, b, cap)
