"""Backend selection for the polynomial kernels.

The compiled module is used when it imports; setting the environment variable
``GREENBLOCKS_PURE_PYTHON=1`` forces the pure-Python fallback.  ``BACKEND``
records the choice.
"""
import os

if os.environ.get("GREENBLOCKS_PURE_PYTHON") == "1":
    from . import _pykernels as _impl
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as _impl
        BACKEND = "python"

mul = _impl.mul
divmod_ = _impl.divmod_
divexact = _impl.divexact
gcd = _impl.gcd
trim = _impl.trim

__all__ = ["BACKEND", "mul", "divmod_", "divexact", "gcd", "trim"]
