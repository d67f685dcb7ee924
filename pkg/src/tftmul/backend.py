"""Selection between the compiled kernels and the pure-Python fallback.

The compiled extension is used automatically when importable, for buffers
exposing a contiguous writable 64-bit unsigned memory layout.  Set
TFTMUL_BACKEND=pure (or =compiled) to force a choice at import time.
"""

import os

try:
    from . import _kernels
except ImportError:
    _kernels = None

_forced = os.environ.get("TFTMUL_BACKEND", "").strip().lower()
if _forced in ("py", "pure", "python"):
    _kernels = None
elif _forced in ("c", "ext", "compiled"):
    if _kernels is None:
        raise ImportError(
            "TFTMUL_BACKEND requests the compiled backend but tftmul._kernels is not built"
        )
elif _forced not in ("", "auto"):
    raise ImportError(f"unknown TFTMUL_BACKEND value {_forced!r}")


def kernels():
    return _kernels


def backend_name():
    return "pure" if _kernels is None else "compiled"


def kernel_view(buf, writable=True):
    """A memoryview the kernels accept, or None to take the pure path."""
    if _kernels is None:
        return None
    try:
        mv = memoryview(buf)
    except TypeError:
        return None
    if mv.ndim != 1 or mv.itemsize != 8 or not mv.contiguous:
        return None
    if writable and mv.readonly:
        return None
    if mv.format not in ("Q", "L", "N"):
        return None
    if mv.format != "Q":
        try:
            mv = mv.cast("Q")
        except TypeError:
            return None
    return mv
