"""Kernel selection: compiled extension when available, else pure Python.

Set ``CLIQUEKIT_PURE_PYTHON=1`` in the environment to force the fallback
(used by the kernel benchmark and the cross-kernel tests).
"""

from __future__ import annotations

import os

if os.environ.get("CLIQUEKIT_PURE_PYTHON"):
    from . import _kernel_py as _impl

    KERNEL_NAME = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        KERNEL_NAME = "c"
    except ImportError:
        from . import _kernel_py as _impl

        KERNEL_NAME = "python"

run_allcliques = _impl.run_allcliques
