"""Select the compiled kernels when available, else the pure-Python ones.

Set ``WEYLEXT_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

if os.environ.get("WEYLEXT_PURE_PYTHON"):
    from ._kernels_py import pascal_mod, rank_mod_p
    BACKEND = "python"
else:
    try:
        from ._kernels import pascal_mod, rank_mod_p
        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import pascal_mod, rank_mod_p
        BACKEND = "python"

__all__ = ["BACKEND", "pascal_mod", "rank_mod_p"]
