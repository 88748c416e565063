"""Hot-loop kernels: compiled extension when built, pure Python otherwise.

Set Z4HULL_PURE=1 in the environment to force the fallback (used by the
benchmark and the backend-equivalence tests).
"""

import os

if os.environ.get("Z4HULL_PURE"):
    from . import _pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _pure as _impl

        BACKEND = "pure"

dual_scan = _impl.dual_scan
closure = _impl.closure

__all__ = ["dual_scan", "closure", "BACKEND"]
