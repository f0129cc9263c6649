# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bivariate Horner evaluator; see :mod:`cik.kernels`."""

import numpy as np

from libc.math cimport pow


def bivariate_horner(const double[:, ::1] coeffs, int offset, const double[::1] vs, const double[::1] ys):
    cdef Py_ssize_t na = coeffs.shape[0], nb = coeffs.shape[1], npts = vs.shape[0]
    cdef Py_ssize_t i, a, b
    cdef double v, y, inner, outer
    out = np.empty(npts, dtype=np.float64)
    cdef double[::1] res = out
    if ys.shape[0] != npts:
        raise ValueError("vs and ys must have the same length")
    with nogil:
        for i in range(npts):
            v = vs[i]
            y = ys[i]
            outer = 0.0
            a = na
            while a > 0:
                a -= 1
                inner = 0.0
                b = nb
                while b > 0:
                    b -= 1
                    inner = inner * y + coeffs[a, b]
                outer = outer * v + inner
            res[i] = outer * pow(v, offset)
    return out
