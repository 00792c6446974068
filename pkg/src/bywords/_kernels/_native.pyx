# cython: language_level=3
# cython: boundscheck=False, wraparound=False
"""Compiled diagonal scan; see pure.py for the contract."""

import array

from cpython cimport array


def diag_line_histogram(codes):
    cdef array.array buf = array.array('q', codes)
    cdef Py_ssize_t n = len(buf)
    if n == 0:
        return 0, [0]
    cdef array.array hist_buf = array.array('q', bytes(8 * n))
    cdef long long[::1] v = buf
    cdef long long[::1] hist = hist_buf
    cdef Py_ssize_t k, i, run
    cdef long long points = 0
    for k in range(1, n):
        run = 0
        for i in range(n - k):
            if v[i] == v[i + k]:
                run += 1
                points += 1
            elif run != 0:
                hist[run] += 1
                run = 0
        if run != 0:
            hist[run] += 1
    return points, list(hist_buf)
