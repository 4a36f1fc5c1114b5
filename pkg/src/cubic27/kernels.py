"""Kernel dispatch: compiled extension if available, pure Python otherwise.

Selection happens once at import.  Set CUBIC27_KERNEL=pure (or =fast) to force
a backend; forcing "fast" raises if the extension is missing.
"""
import os

from . import _purecore

_choice = os.environ.get("CUBIC27_KERNEL", "").strip().lower()

_impl = None
if _choice in ("", "fast"):
    try:
        from . import _fastcore as _impl
    except ImportError:
        if _choice == "fast":
            raise ImportError(
                "CUBIC27_KERNEL=fast but the compiled kernel is not built; "
                "reinstall the package with a C compiler available"
            )
        _impl = None
if _impl is None:
    _impl = _purecore

BACKEND = _impl.BACKEND

mat_mul = _impl.mat_mul
mat_vec = _impl.mat_vec
mat_inv = _impl.mat_inv
mat_solve = _impl.mat_solve
form_map = _impl.form_map
form_eval = _impl.form_eval
all_zero_at_images = _impl.all_zero_at_images
scan_surface = _impl.scan_surface


def backends():
    """All importable kernel backends, for benchmarks and twin tests."""
    out = {"pure": _purecore}
    try:
        from . import _fastcore

        out["fast"] = _fastcore
    except ImportError:
        pass
    return out
