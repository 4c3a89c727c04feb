"""Enumeration kernels with a compiled backend and a pure-Python fallback.

The compiled module is used when it imports; set ``LIFTEDCODES_PURE_PYTHON=1``
to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

backends = {"python": _pykernels}

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None
else:
    backends["cython"] = _ckernels

if _ckernels is not None and os.environ.get("LIFTEDCODES_PURE_PYTHON", "") in ("", "0"):
    _impl = _ckernels
else:
    _impl = _pykernels

BACKEND = _impl.NAME

padd = _impl.padd
neighbor_table = _impl.neighbor_table
bfs_from = _impl.bfs_from
layer_counts = _impl.layer_counts
all_sources_regularity = _impl.all_sources_regularity
vector_syndromes = _impl.vector_syndromes
nearest_distances = _impl.nearest_distances
hamming_layer_counts = _impl.hamming_layer_counts

__all__ = [
    "BACKEND", "backends", "padd", "neighbor_table", "bfs_from", "layer_counts",
    "all_sources_regularity", "vector_syndromes", "nearest_distances",
    "hamming_layer_counts",
]
