"""Backend selection for the bit kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is loaded.  Setting ``CELLBLOCK_PURE=1`` forces the fallback.
"""
from __future__ import annotations

import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("CELLBLOCK_PURE"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_impl = compiled_backend or python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

SCALE = python_backend.SCALE
PACKING = python_backend.PACKING
CHORD = python_backend.CHORD
TRIAD = python_backend.TRIAD
FULL = python_backend.FULL
NSETS = python_backend.NSETS

rotate = _impl.rotate
canonical = _impl.canonical
blocks = _impl.blocks
cells = _impl.cells
tone_blocks = _impl.tone_blocks
tone_cells = _impl.tone_cells
complete = _impl.complete
complete_table = _impl.complete_table
irreducible_table = _impl.irreducible_table
count_table = _impl.count_table
