"""Kernel selection: the compiled ``_ckernels`` extension when importable.

Set ``QUINTIC_ATLAS_PURE=1`` to force the pure-Python kernels.
"""

import os

from . import _pykernels

BACKEND = "python"
if os.environ.get("QUINTIC_ATLAS_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
else:
    _impl = _pykernels

eval_table = _impl.eval_table
eval_homogeneous = _impl.eval_homogeneous
sign_variations_at = _impl.sign_variations_at

__all__ = ["BACKEND", "eval_table", "eval_homogeneous", "sign_variations_at"]
