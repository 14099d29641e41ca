"""Backend selection: compiled kernels when available, pure Python otherwise.

Set the environment variable ``FALAUDIT_PURE_PYTHON=1`` (before import) to
force the pure-Python kernels even when the extension is built.  Both
backends are bit-identical by construction; see tests/test_backends.py.
"""
import os

if os.environ.get("FALAUDIT_PURE_PYTHON"):
    from . import _slowloops as kernels
else:
    try:
        from . import _fastloops as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _slowloops as kernels  # type: ignore[no-redef]


def backend_name() -> str:
    """Either ``"cython"`` or ``"python"``."""
    return kernels.BACKEND
