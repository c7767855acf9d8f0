"""Kernel selection: compiled extension if importable, pure Python otherwise.

Set ``PATHCAT_PURE_PYTHON=1`` to force the fallback (used by the benchmark
and by the cross-check tests).
"""

import os

from . import _fallback

BACKEND = "python"
_compiled = None

if not os.environ.get("PATHCAT_PURE_PYTHON"):
    try:
        from . import _ckernels as _compiled

        BACKEND = "cython"
    except ImportError:  # extension not built
        _compiled = None


def normalize_word(word):
    if _compiled is not None:
        return _compiled.normalize_word(word)
    return _fallback.normalize_word(word)


def snf_diagonal(rows, ncols):
    if _compiled is not None:
        diag = _compiled.snf_diagonal_int64(rows, ncols)
        if diag is not None:
            return _fallback._fix_divisibility(diag)
    return _fallback.snf_diagonal(rows, ncols)
