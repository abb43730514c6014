"""Backend selection for the oracle's dense numeric kernels.

Two interchangeable implementations exist: jitted loops (numba) and a
pure-NumPy fallback. The environment variable POINCARE_SHARP_BACKEND picks
one explicitly ("numba" or "numpy"); unset or "auto" prefers numba and
falls back to NumPy when numba is unavailable. The choice is made once at
import; benchmarks/bench_kernels.py times the two side by side.
"""

from __future__ import annotations

import os

BACKEND_ENV_VAR = "POINCARE_SHARP_BACKEND"


def _load(name: str):
    if name == "numpy":
        from . import _kernels_numpy

        return _kernels_numpy
    if name == "numba":
        from . import _kernels_numba

        return _kernels_numba
    raise ValueError(
        f"{BACKEND_ENV_VAR} must be 'numba', 'numpy', or 'auto', got {name!r}"
    )


def _select():
    choice = os.environ.get(BACKEND_ENV_VAR, "auto").strip().lower() or "auto"
    if choice != "auto":
        return _load(choice)
    try:
        return _load("numba")
    except ImportError:
        return _load("numpy")


_impl = _select()

backend_name: str = _impl.BACKEND
hat_moment_rows = _impl.hat_moment_rows
lu_solve = _impl.lu_solve
