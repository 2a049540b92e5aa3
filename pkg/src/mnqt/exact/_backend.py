"""Select the compiled polynomial kernels when available.

Set ``MNQT_PURE_PYTHON=1`` to force the pure-Python fallback.
"""
import os

if os.environ.get("MNQT_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as kernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:  # extension not built
        from . import _pykernels as kernels

BACKEND = kernels.BACKEND
