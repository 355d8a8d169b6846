"""Kernel backend selection.

The compiled extension ``spindet._ddem`` carries the hot Euler-Maclaurin
loop; ``spindet._ddem_py`` is the algorithmically identical pure-Python
twin.  Set SPINDET_PURE_PYTHON=1 to force the fallback (used by the test
suite and the benchmark).
"""

from __future__ import annotations

import os

if os.environ.get("SPINDET_PURE_PYTHON"):
    from . import _ddem_py as kernel
else:
    try:
        from . import _ddem as kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _ddem_py as kernel

BACKEND: str = kernel.BACKEND
em_hurwitz = kernel.em_hurwitz
