"""Backend selection for the graph kernels.

The compiled extension is used when it was built; otherwise the pure-Python
version is used.  ``MACQ_PURE_PYTHON=1`` forces the fallback.
"""
import os

from . import _bfs_py

BACKEND = "python"
all_pairs_bfs = _bfs_py.all_pairs_bfs

if not os.environ.get("MACQ_PURE_PYTHON"):
    try:
        from . import _bfs
    except ImportError:
        pass
    else:
        all_pairs_bfs = _bfs.all_pairs_bfs
        BACKEND = "cython"
