"""Numeric inner loop, compiled when available.

``bivariate_horner(coeffs, offset, vs, ys)`` returns, for each point i,

    vs[i]**offset * sum_{a,b} coeffs[a, b] * vs[i]**a * ys[i]**b

evaluated by nested Horner steps. The Cython build is used when it
imports; set ``CIK_PURE_PYTHON=1`` to force the numpy fallback.
"""

import os

import numpy as np

from . import _pykernels

__all__ = ["BACKEND", "bivariate_horner", "py_bivariate_horner", "c_bivariate_horner"]

py_bivariate_horner = _pykernels.bivariate_horner

try:
    from ._ckernels import bivariate_horner as _c_impl
except ImportError:  # extension not built
    _c_impl = None


def c_bivariate_horner(coeffs, offset, vs, ys):
    if _c_impl is None:
        raise RuntimeError("the compiled kernel is not built")
    return _c_impl(
        np.ascontiguousarray(coeffs, dtype=np.float64),
        int(offset),
        np.ascontiguousarray(vs, dtype=np.float64),
        np.ascontiguousarray(ys, dtype=np.float64),
    )


if _c_impl is not None and not os.environ.get("CIK_PURE_PYTHON"):
    BACKEND = "cython"
    bivariate_horner = c_bivariate_horner
else:
    BACKEND = "python"
    bivariate_horner = py_bivariate_horner
