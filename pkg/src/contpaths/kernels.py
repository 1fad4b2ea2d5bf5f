"""Backend selection for the numeric hot loops.

The compiled extension is used when it imports; setting
``CONTPATHS_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
import os

from . import _purepy

PURE_PYTHON_ENV = "CONTPATHS_PURE_PYTHON"

_impl = _purepy
if os.environ.get(PURE_PYTHON_ENV, "") not in ("1", "true", "yes"):
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _purepy

BACKEND = "cython" if _impl is not _purepy else "python"

scaled_bessel_sum = _impl.scaled_bessel_sum
smirnov_tally = _impl.smirnov_tally
eval_bands = _impl.eval_bands


def available_backends():
    """Map backend name to module for every backend importable here."""
    found = {"python": _purepy}
    try:
        from . import _speedups
    except ImportError:
        pass
    else:
        found["cython"] = _speedups
    return found
