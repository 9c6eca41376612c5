"""Backend selection for the F_p elimination kernels.

The compiled extension is used when it was built; otherwise the numpy
implementation is loaded. Set ``POISSON_HP0_BACKEND=python`` to force the
fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("POISSON_HP0_BACKEND", "").lower() == "python":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

rank = _impl.rank
rref = _impl.rref

__all__ = ["BACKEND", "rank", "rref"]
