"""Kernel backend selection.

The compiled extension (``fermatquad._kernels``) is preferred when it was
built; otherwise the pure-Python twin is used.  Set ``FERMATQUAD_PURE=1``
to force the pure backend, e.g. for benchmarking or debugging.
"""

import os

if os.environ.get("FERMATQUAD_PURE"):
    from fermatquad import _kernels_py as _impl
else:
    try:
        from fermatquad import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from fermatquad import _kernels_py as _impl

BACKEND = _impl.BACKEND

horner = _impl.horner
newton_polish = _impl.newton_polish
residual_norm = _impl.residual_norm
objective_sum = _impl.objective_sum
weiszfeld_loop = _impl.weiszfeld_loop


def backend_name() -> str:
    """Name of the active kernel backend: ``"cython"`` or ``"python"``."""
    return BACKEND
