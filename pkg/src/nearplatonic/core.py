"""Kernel backend selection.

The compiled extension is used when it imports and ``NEARPLATONIC_PURE`` is
unset; otherwise the pure-Python twin in ``_pycore`` takes over.  Both expose
``traversal_code``, ``canonical_code`` and ``enumerate_regular``.
"""

from __future__ import annotations

import os

from . import _pycore

_compiled = None
if not os.environ.get("NEARPLATONIC_PURE"):
    try:
        from . import _core as _compiled
    except ImportError:  # extension not built
        _compiled = None

kernels = _compiled if _compiled is not None else _pycore
BACKEND = "cython" if _compiled is not None else "python"

traversal_code = kernels.traversal_code
canonical_code = kernels.canonical_code
enumerate_regular = kernels.enumerate_regular


def get_kernels(name: str | None = None):
    """Return the kernel module by name (``"cython"`` or ``"python"``)."""
    if name is None:
        return kernels
    if name == "python":
        return _pycore
    if name == "cython":
        from . import _core

        return _core
    raise ValueError(f"unknown backend {name!r}")
