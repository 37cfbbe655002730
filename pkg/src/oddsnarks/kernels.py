"""Kernel selection: compiled Cython core if importable, else pure Python.

Set ``ODDSNARKS_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("ODDSNARKS_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "cython"

degree_subgraphs = _impl.degree_subgraphs
three_edge_coloring = _impl.three_edge_coloring
# flow searches are short; the Python version is used by both backends
max_flow_unit = _pykernels.max_flow_unit


def available_backends() -> dict[str, object]:
    """Map backend name to kernel module, for benchmarks and cross-checks."""
    found: dict[str, object] = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
