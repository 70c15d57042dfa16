"""Pick the compiled kernels when they were built, the pure-Python ones otherwise.

Set HECKEK_PURE_PYTHON=1 to force the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("HECKEK_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # noqa: F811
        BACKEND = "compiled"
    except ImportError:
        _impl = _pykernels


def snf_diagonal(rows):
    if _impl is not _pykernels:
        try:
            return _impl.snf_diagonal(rows)
        except OverflowError:
            pass
    return _pykernels.snf_diagonal(rows)


def commuting_indices(images, signs, w_image, w_signs):
    if not len(images):
        return []
    return _impl.commuting_indices(images, signs, w_image, w_signs)
