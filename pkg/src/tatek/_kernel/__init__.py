"""Arithmetic kernel: integer-coefficient convolution and monic remainder.

These two loops sit under every cyclotomic multiplication and hence under
all series arithmetic. A compiled variant is used when available; set
TATEK_PURE=1 to force the interpreted one. Both expose the same functions
and produce identical results (plain Python ints throughout, so there is
no overflow anywhere).
"""

import os

from . import _fallback

if os.environ.get("TATEK_PURE") == "1":
    _impl = _fallback
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _fallback

convolve = _impl.convolve
monic_rem = _impl.monic_rem

#: Name of the active implementation ("compiled" or "pure").
BACKEND = "compiled" if _impl is not _fallback else "pure"

__all__ = ["convolve", "monic_rem", "BACKEND"]
