"""Pick the compiled kernel when available, else the pure-Python one.

Setting ``CIRCRAMSEY_PURE=1`` forces the pure-Python kernel.
"""

import os

from . import _pykernels

if os.environ.get("CIRCRAMSEY_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _pykernels

BitCore = _impl.BitCore
BACKEND = BitCore.backend
KIND_K = _impl.KIND_K
KIND_J = _impl.KIND_J
KIND_C = _impl.KIND_C
KIND_W = _impl.KIND_W
KIND_KB = _impl.KIND_KB
MAX_N = _impl.MAX_N
MAX_COLORS = _impl.MAX_COLORS

PurePythonCore = _pykernels.BitCore
