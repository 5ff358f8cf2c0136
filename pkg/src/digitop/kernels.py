"""Backend selection for the hot kernels.

The compiled extension is used when importable; set ``DIGITOP_PURE_PYTHON=1``
to force the pure-Python fallback.  Codomains wider than 64 vertices always
take the Python path since the compiled masks are 64-bit.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("DIGITOP_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

MASK_BITS = 64


def available_backends():
    """Names of the backends importable in this process."""
    names = ["python"]
    if compiled_backend is not None:
        names.append("cython")
    return names


def _pick(width):
    if compiled_backend is not None and width <= MASK_BITS:
        return compiled_backend
    return python_backend


BACKEND = _pick(0).NAME


def backend(width=0, name=None):
    """Kernel module for a codomain of ``width`` vertices, or the one named."""
    if name == "python":
        return python_backend
    if name == "cython":
        if compiled_backend is None:
            raise RuntimeError("compiled kernels are not built")
        if width > MASK_BITS:
            raise ValueError(f"compiled kernels need codomain <= {MASK_BITS}, got {width}")
        return compiled_backend
    return _pick(width)
