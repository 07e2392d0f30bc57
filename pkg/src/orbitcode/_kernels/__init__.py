"""Kernel backend selection.

The hot matrix loops (elimination, determinants, batched minors) exist
twice: a compiled Cython core and a pure-Python fallback with identical
semantics.  The compiled core is picked at import when available; set
``ORBITCODE_KERNEL=pure`` or ``ORBITCODE_KERNEL=compiled`` to force one
(forcing ``compiled`` raises if the extension is missing).

``use_backend`` rebinds the dispatch at runtime, which the benchmark
suite and the backend-parity tests use to compare both implementations
in a single process.
"""

from __future__ import annotations

import os

from . import pure as _pure
from .tables import FieldTables

__all__ = [
    "FieldTables",
    "available_backends",
    "batch_minors",
    "current_backend",
    "det",
    "matmul",
    "rref",
    "use_backend",
]

try:
    from . import _core as _compiled
except ImportError:
    _compiled = None

_impl = None
_name = ""


def use_backend(name):
    """Select the kernel implementation: 'pure' or 'compiled'."""
    global _impl, _name
    if name == "pure":
        _impl = _pure
    elif name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernel extension is not available")
        _impl = _compiled
    else:
        raise ValueError(f"unknown kernel backend {name!r}")
    _name = name


def current_backend():
    return _name


def available_backends():
    names = ["pure"]
    if _compiled is not None:
        names.append("compiled")
    return tuple(names)


_requested = os.environ.get("ORBITCODE_KERNEL", "auto")
if _requested == "auto":
    use_backend("compiled" if _compiled is not None else "pure")
else:
    use_backend(_requested)


def matmul(a, b, t):
    return _impl.matmul(a, b, t)


def rref(a, t):
    return _impl.rref(a, t)


def det(a, t):
    return _impl.det(a, t)


def batch_minors(a, row_sets, col_sets, t):
    return _impl.batch_minors(a, row_sets, col_sets, t)
