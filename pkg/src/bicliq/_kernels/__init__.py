"""Search-kernel backend selection.

The compiled extension (_native, Cython) and the pure-Python reference
(pure) implement the same two searches with identical branch order, so they
return identical witnesses.  The native backend is picked at import when the
extension is importable; setting BICLIQ_PURE=1 in the environment forces the
reference implementation.
"""

from __future__ import annotations

import importlib
import os

from . import pure as _pure

_native = None
if os.environ.get("BICLIQ_PURE", "") not in ("1", "true", "yes"):
    try:
        _native = importlib.import_module(__name__ + "._native")
    except ImportError:
        _native = None

ACTIVE = "native" if _native is not None else "pure"


def rectangle_partition(nrows, ncols, row_bits, k, deadline_ns=None):
    impl = _native if _native is not None else _pure
    return impl.rectangle_partition(nrows, ncols, list(row_bits), k, deadline_ns)


def biclique_partition(n, edges, adj_bits, k, deadline_ns=None):
    impl = _native if _native is not None else _pure
    return impl.biclique_partition(n, list(edges), list(adj_bits), k, deadline_ns)
