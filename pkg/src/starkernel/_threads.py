"""Opt-in cap on internal (BLAS) parallelism via STARKERNEL_THREADS.

Must run before numpy loads its BLAS backend, so the package imports this
module first.  Without the environment variable this is a no-op.
"""

import os

_CAP = os.environ.get("STARKERNEL_THREADS")
if _CAP:
    for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS",
                "MKL_NUM_THREADS", "NUMEXPR_NUM_THREADS"):
        os.environ.setdefault(var, _CAP)
