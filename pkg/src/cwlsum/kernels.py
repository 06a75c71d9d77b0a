"""Backend selection for the hot loops.

The compiled extension is used when it imports; set ``CWLSUM_PURE=1`` to
force the pure-Python implementation.  ``BACKEND`` names the active one.
"""
import os

from . import _kernels_py

_compiled = None
if os.environ.get("CWLSUM_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _kernels_py


def minimal_elements(points):
    return _impl.minimal_elements(points)


def membership(gens, points):
    return _impl.membership(gens, points)


def koszul_candidates(gens, n, values):
    if _compiled is not None and n <= _compiled.MAX_ARITY:
        return _compiled.koszul_candidates(gens, n, values)
    return _kernels_py.koszul_candidates(gens, n, values)
