"""Backend selection for the hot kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is loaded.  Setting ``EQSPRINGER_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("EQSPRINGER_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

mul_terms = _impl.mul_terms
rename_terms = _impl.rename_terms
Echelon = _impl.Echelon
rank = _impl.rank


def available_backends():
    """Return ``{name: module}`` for every backend importable here."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        out["cython"] = _kernels
    return out
