"""Kernel selection: compiled extension when available, pure Python otherwise.

SPINSUM_KERNEL=py forces the pure implementation, SPINSUM_KERNEL=cy demands
the compiled one (ImportError if it was not built). Default: try compiled,
fall back silently.
"""

import os

_choice = os.environ.get("SPINSUM_KERNEL", "").strip().lower()

if _choice == "py":
    from . import _poly_py as _impl

    KERNEL = "py"
elif _choice == "cy":
    from . import _poly_cy as _impl  # type: ignore[attr-defined]

    KERNEL = "cy"
else:
    try:
        from . import _poly_cy as _impl  # type: ignore[attr-defined]

        KERNEL = "cy"
    except ImportError:
        from . import _poly_py as _impl

        KERNEL = "py"

mul_reduce = _impl.mul_reduce
add_scaled = _impl.add_scaled
scale = _impl.scale
