"""Pure-Python/numpy fallback for :mod:`cik._ckernels`."""

import numpy as np


def bivariate_horner(coeffs, offset, vs, ys):
    coeffs = np.asarray(coeffs, dtype=np.float64)
    vs = np.asarray(vs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    if vs.shape != ys.shape:
        raise ValueError("vs and ys must have the same length")
    outer = np.zeros_like(vs)
    for a in range(coeffs.shape[0] - 1, -1, -1):
        inner = np.zeros_like(vs)
        for b in range(coeffs.shape[1] - 1, -1, -1):
            inner = inner * ys + coeffs[a, b]
        outer = outer * vs + inner
    return outer * vs ** float(offset)
