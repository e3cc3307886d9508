"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python
module is the fallback. Set ``LYNFAC_PURE_KERNELS=1`` to force the
fallback (used by the backend-comparison benchmark and tests).
"""

from __future__ import annotations

import os

if os.environ.get("LYNFAC_PURE_KERNELS"):
    from lynfac import _kernels_py as kernels
else:
    try:
        from lynfac import _kernels_c as kernels  # type: ignore[no-redef]
    except ImportError:
        from lynfac import _kernels_py as kernels  # type: ignore[no-redef]

BACKEND_NAME: str = kernels.BACKEND_NAME

__all__ = ["kernels", "BACKEND_NAME"]
