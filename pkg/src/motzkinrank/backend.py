"""Kernel backend selection.

Imports the compiled Cython kernels when available and falls back to the
pure Python twins otherwise.  Set MOTZKINRANK_PURE=1 to force the pure
backend (useful for benchmarking and for the parity tests).
"""

import os

if os.environ.get("MOTZKINRANK_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
conv_trunc = _impl.conv_trunc
dp_rows = _impl.dp_rows
modp_echelon = _impl.modp_echelon
bareiss_echelon = _impl.bareiss_echelon
