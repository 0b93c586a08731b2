"""Kernel selection: compiled extension when available, pure Python otherwise.

Set CRITGROUP_PURE=1 to force the pure-Python kernels (useful for the
benchmark and for debugging).  Both twins expose the same functions with
identical results; only speed differs.
"""

import os

if os.environ.get("CRITGROUP_PURE"):
    from . import _core_py as _impl
else:
    try:
        from . import _core_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _core_py as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION
det_bareiss = _impl.det_bareiss
adjugate_times = _impl.adjugate_times
snf_diagonal = _impl.snf_diagonal
