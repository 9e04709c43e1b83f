"""Hot kernels: compiled Cython module when built, pure Python otherwise.

Set ``FPGROUPS_PURE_PYTHON=1`` to force the fallback.
"""
import os

from fpgroups._kernels import _pykernels

BACKEND = "python"
_impl = _pykernels
if not os.environ.get("FPGROUPS_PURE_PYTHON"):
    try:
        from fpgroups._kernels import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

free_reduce_codes = _impl.free_reduce_codes
common_prefix_length = _impl.common_prefix_length
max_overlaps = _impl.max_overlaps
DehnTable = _impl.DehnTable
dehn_find = _impl.dehn_find

__all__ = [
    "BACKEND",
    "DehnTable",
    "common_prefix_length",
    "dehn_find",
    "free_reduce_codes",
    "max_overlaps",
]
