"""Pick the compiled kernels when importable, else the NumPy fallback."""

import os

if os.environ.get("GA_GROVER_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as kernels
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        from . import _pykernels as kernels

BACKEND = kernels.BACKEND
