"""Backend selection: compiled kernels when available, numpy fallback otherwise.

Set DIVCOR_FORCE_PYTHON=1 to force the fallback (used by the benchmark and
backend-equivalence tests).  Integer outputs are bit-identical across
backends; float outputs agree to ~1e-12 relative (the two backends use
different, but individually fixed, summation orders).
"""

from __future__ import annotations

import os

if os.environ.get("DIVCOR_FORCE_PYTHON"):
    from . import fallback as _impl

    USING_COMPILED = False
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        USING_COMPILED = True
    except ImportError:
        from . import fallback as _impl

        USING_COMPILED = False

corr_sum_k3 = _impl.corr_sum_k3
smooth_sum_k3 = _impl.smooth_sum_k3
count_heights_k3 = _impl.count_heights_k3


def backend_name() -> str:
    return "compiled" if USING_COMPILED else "python"
