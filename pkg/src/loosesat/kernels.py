"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it has been built;
otherwise the pure-Python ``_pykernels`` take over.  Setting the environment
variable ``LOOSESAT_PURE=1`` forces the pure-Python backend.
"""

import os

from . import _pykernels

PURE_REQUESTED = os.environ.get("LOOSESAT_PURE", "") not in ("", "0")

if PURE_REQUESTED:
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

first_uncovered = _impl.first_uncovered
find_triangle = _impl.find_triangle

__all__ = ["BACKEND", "PURE_REQUESTED", "first_uncovered", "find_triangle"]
