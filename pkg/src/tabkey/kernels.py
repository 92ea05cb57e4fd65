"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when importable; set
``TABKEY_PURE_PYTHON=1`` to force the pure-Python fallback.
"""
import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("TABKEY_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

_active = compiled_backend or python_backend

BACKEND = _active.BACKEND
find_removable = _active.find_removable
neighbours = _active.neighbours
remove_at = _active.remove_at
eliminate_rows = _active.eliminate_rows
census_counts = _active.census_counts
count_132_scan = _active.count_132_scan
