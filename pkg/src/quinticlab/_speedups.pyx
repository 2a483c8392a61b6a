# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled inner loop for batched evaluation of the sine-weighted root form.

The kernel evaluates the 20-term quintic form on a 5-tuple of complex roots,
reindexed by each row of an index matrix.  Term order (n outer, m inner) is
the same as in the numpy fallback so both backends agree to rounding.
"""

import math

import numpy as np

cdef double _W[20]
cdef Py_ssize_t _I0[20]
cdef Py_ssize_t _I1[20]
cdef Py_ssize_t _I2[20]

cdef int _t = 0
cdef int _m, _n
for _n in range(1, 5):
    for _m in range(5):
        _W[_t] = math.sin(2.0 * math.pi * _n / 5.0)
        _I0[_t] = _m
        _I1[_t] = (_m + _n) % 5
        _I2[_t] = (_m + 2 * _n) % 5
        _t += 1


def eval_rows(const double complex[::1] x, const long long[:, ::1] idx):
    """Evaluate the form on (x[i0], ..., x[i4]) for each index row (i0..i4)."""
    if x.shape[0] != 5 or idx.shape[1] != 5:
        raise ValueError("expected x of length 5 and idx rows of length 5")
    cdef Py_ssize_t k, t
    cdef Py_ssize_t nrows = idx.shape[0]
    out_arr = np.empty(nrows, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    cdef double complex acc, u, v, w
    cdef double complex r[5]
    for k in range(nrows):
        for t in range(5):
            r[t] = x[idx[k, t]]
        acc = 0
        for t in range(20):
            u = r[_I0[t]]
            v = r[_I1[t]]
            w = r[_I2[t]]
            acc = acc + _W[t] * u * v * v * w * w
        out[k] = acc
    return out_arr
