"""Hot kernels, compiled when available.

The Cython module ``_ckernels`` is used if it was built; otherwise the
pure-Python ``_pure`` module is loaded.  Set ``QSYMOPS_PURE_PYTHON=1`` to
force the fallback.  ``BACKEND`` names the one in use.
"""

import os

from . import _pure

if os.environ.get("QSYMOPS_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pure
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pure
        BACKEND = "python"
    else:
        BACKEND = "cython"

qshuffle = _impl.qshuffle
qshuffle_maps = _impl.qshuffle_maps
immaculate_count = _impl.immaculate_count
series_product = _impl.series_product
word_product = _impl.word_product

MUL, PREC, SUCCEQ, PRECEQ, SUCC, CIRC, BELG, TVIM = range(8)
OP_CODES = {
    "mul": MUL,
    "prec": PREC,
    "succeq": SUCCEQ,
    "preceq": PRECEQ,
    "succ": SUCC,
    "circ": CIRC,
    "belg": BELG,
    "tvim": TVIM,
}

__all__ = [
    "BACKEND",
    "OP_CODES",
    "immaculate_count",
    "qshuffle",
    "qshuffle_maps",
    "series_product",
    "word_product",
]
