"""GF(p) row-reduction kernels: compiled if built, numpy otherwise.

Set ``SCROLLIDEALS_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import gfp_py

BACKEND = "python"
rref_inplace = gfp_py.rref_inplace

if not os.environ.get("SCROLLIDEALS_PURE_PYTHON"):
    try:
        from . import gfp as _compiled
    except ImportError:
        pass
    else:
        rref_inplace = _compiled.rref_inplace
        BACKEND = "cython"

__all__ = ["BACKEND", "rref_inplace", "gfp_py"]
