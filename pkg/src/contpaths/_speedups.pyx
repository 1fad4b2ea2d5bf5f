# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; see :mod:`contpaths._purepy` for the reference versions."""
from libc.math cimport pow, fabs
import math

import numpy as np
cimport numpy as cnp

cnp.import_array()


def scaled_bessel_sum(long order, double q, double tol, long max_terms):
    cdef double term = 1.0 / math.factorial(order)
    cdef double total = 0.0
    cdef double ratio, limit
    cdef long m = 0
    while m < max_terms:
        total += term
        m += 1
        term = term * q / (<double>(m * (m + order)))
        ratio = q / (<double>((m + 1) * (m + 1 + order)))
        if total != 0.0:
            limit = tol * fabs(total)
        else:
            limit = tol
        if term <= limit and ratio < 1.0:
            return total, term, ratio, m, True
    return total, term, 1.0, m, False


def smirnov_tally(int d, int n):
    cdef dict tally = {}
    cdef int i, pos
    cdef bint ok
    if n == 0:
        tally[(0,) * d] = 1
        return tally
    cdef int[::1] word = np.zeros(n, dtype=np.intc)
    cdef long[::1] freq = np.zeros(d, dtype=np.int_)
    while True:
        ok = True
        for i in range(1, n):
            if word[i] == word[i - 1]:
                ok = False
                break
        if ok:
            freq[:] = 0
            for i in range(n):
                freq[word[i]] += 1
            key = tuple(freq)
            tally[key] = tally.get(key, 0) + 1
        pos = n - 1
        while pos >= 0 and word[pos] == d - 1:
            word[pos] = 0
            pos -= 1
        if pos < 0:
            return tally
        word[pos] += 1


def eval_bands(exps, coefs, point, long cap):
    cdef long[:, ::1] e = np.ascontiguousarray(exps, dtype=np.int_).reshape(len(coefs), len(point))
    cdef double[::1] c = np.ascontiguousarray(coefs, dtype=np.float64)
    cdef double[::1] p = np.ascontiguousarray(point, dtype=np.float64)
    cdef Py_ssize_t nterms = c.shape[0]
    cdef Py_ssize_t dim = p.shape[0]
    cdef Py_ssize_t t, j
    cdef long k, deg
    cdef double term
    out = np.zeros(cap + 1, dtype=np.float64)
    cdef double[::1] bands = out
    for t in range(nterms):
        term = c[t]
        deg = 0
        for j in range(dim):
            k = e[t, j]
            if k:
                term *= pow(p[j], <double>k)
                deg += k
        bands[deg] += term
    return out.tolist()
