"""Select the polynomial kernel implementation at import time.

The compiled extension is used when it was built; setting the environment
variable ``JMH_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

if os.environ.get("JMH_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        from . import _kernels_py as kernels

mono_mul = kernels.mono_mul
mono_pow = kernels.mono_pow
poly_add = kernels.poly_add
poly_mul = kernels.poly_mul
poly_mul_term = kernels.poly_mul_term
BACKEND = kernels.BACKEND
