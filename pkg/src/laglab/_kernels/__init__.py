"""Kernel backend selection: compiled extension if available, numpy fallback.

Set LAGLAB_PURE_PYTHON=1 to force the fallback (useful for the benchmark and
for debugging). `backend()` reports which implementation is active.
"""

import os

if os.environ.get("LAGLAB_PURE_PYTHON") == "1":
    from ._pycore import BACKEND, ascend, partials, weight_poly
else:
    try:
        from ._core import BACKEND, ascend, partials, weight_poly
    except ImportError:
        from ._pycore import BACKEND, ascend, partials, weight_poly


def backend() -> str:
    """Name of the active kernel implementation ("cython" or "python")."""
    return BACKEND


__all__ = ["ascend", "partials", "weight_poly", "backend", "BACKEND"]
