"""Kernel backend selection.

The hot kernels exist twice: numba-jitted loops (`_nb_kernels`) and a pure
numpy fallback (`_np_kernels`). Selection happens once at import:

    EISENZERO_BACKEND=numba   require numba, fail loudly if unavailable
    EISENZERO_BACKEND=numpy   force the numpy fallback
    unset / auto              numba when importable, numpy otherwise

`benchmarks/bench_backends.py` compares the two.
"""

import os

_FLAG = os.environ.get("EISENZERO_BACKEND", "auto").strip().lower()

if _FLAG not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        f"EISENZERO_BACKEND={_FLAG!r} not understood (use 'auto', 'numba' or 'numpy')"
    )

if _FLAG == "numpy":
    from . import _np_kernels as kernels
elif _FLAG == "numba":
    from . import _nb_kernels as kernels
else:
    try:
        from . import _nb_kernels as kernels
    except ImportError:
        from . import _np_kernels as kernels


def backend_name() -> str:
    """Name of the active kernel backend ('numba' or 'numpy')."""
    return kernels.BACKEND_NAME
