"""Selects the compiled kernels when available, the pure-Python ones otherwise.

Set ``TOURNAKIT_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("TOURNAKIT_PURE") != "1":
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

ham_path_starts = _impl.ham_path_starts
ham_path_first = _impl.ham_path_first
ham_path_count = _impl.ham_path_count
sub_path_starts = _impl.sub_path_starts
cycle_exists = _impl.cycle_exists
dfs_first = _impl.dfs_first
canonical = _impl.canonical
MAX_DP_ORDER = _pykernels.MAX_DP_ORDER
