"""Select the compiled kernels when available.

Set ``AFFKNUTH_PURE_PYTHON=1`` to force the pure-Python fallback.
"""
import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("AFFKNUTH_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

NEG_INF = _kernels_py.NEG_INF
POS_INF = _kernels_py.POS_INF

cycle_chain = _impl.cycle_chain
chain_lengths = _impl.chain_lengths
maxplus_numbering = _impl.maxplus_numbering
minplus_numbering = _impl.minplus_numbering
stream_bounds = _impl.stream_bounds

__all__ = [
    "BACKEND",
    "NEG_INF",
    "POS_INF",
    "cycle_chain",
    "chain_lengths",
    "maxplus_numbering",
    "minplus_numbering",
    "stream_bounds",
]
