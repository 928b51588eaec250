# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot small-matrix product loops.

Same contracts as ``pyref``; see that module for the semantics.  The
scalar loops win only while per-call overhead dominates the flops; above
the measured crossover dimension the batched BLAS path in ``pyref`` is
faster, so these functions delegate to it there (benchmarks/bench_kernels.py
reproduces the measurement).
"""

import numpy as np

cimport numpy as cnp

from . import pyref

cnp.import_array()

NAME = "c"

# largest matrix dimension at which the scalar loops beat batched BLAS
DEF CROSSOVER = 3

ctypedef double complex zcomplex


cdef void _zmatmul(const zcomplex* a, const zcomplex* b, zcomplex* out,
                   Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i, j, k
    cdef zcomplex aik
    for i in range(n * n):
        out[i] = 0
    for i in range(n):
        for k in range(n):
            aik = a[i * n + k]
            if aik == 0:
                continue
            for j in range(n):
                out[i * n + j] = out[i * n + j] + aik * b[k * n + j]


def gamma_products(ladders, gammas):
    if np.asarray(ladders).shape[2] > CROSSOVER:
        return pyref.gamma_products(ladders, gammas)
    cdef cnp.ndarray[zcomplex, ndim=4, mode="c"] lad = \
        np.ascontiguousarray(ladders, dtype=np.complex128)
    cdef cnp.ndarray[cnp.intp_t, ndim=2, mode="c"] gam = \
        np.ascontiguousarray(gammas, dtype=np.intp)
    cdef Py_ssize_t d = lad.shape[0]
    cdef Py_ssize_t n = lad.shape[2]
    cdef Py_ssize_t t = gam.shape[0]
    cdef cnp.ndarray[zcomplex, ndim=3, mode="c"] out = \
        np.empty((t, n, n), dtype=np.complex128)
    cdef cnp.ndarray[zcomplex, ndim=1, mode="c"] scratch = \
        np.empty(n * n, dtype=np.complex128)
    cdef Py_ssize_t i, j, k
    cdef zcomplex* cur
    with nogil:
        for i in range(t):
            cur = &out[i, 0, 0]
            for k in range(n * n):
                cur[k] = (&lad[0, gam[i, 0], 0, 0])[k]
            for j in range(1, d):
                _zmatmul(cur, &lad[j, gam[i, j], 0, 0], &scratch[0], n)
                for k in range(n * n):
                    cur[k] = scratch[k]
    return out


def pairwise_matmul(a, b):
    if np.asarray(a).shape[1] > CROSSOVER:
        return pyref.pairwise_matmul(a, b)
    cdef cnp.ndarray[zcomplex, ndim=3, mode="c"] aa = \
        np.ascontiguousarray(a, dtype=np.complex128)
    cdef cnp.ndarray[zcomplex, ndim=3, mode="c"] bb = \
        np.ascontiguousarray(b, dtype=np.complex128)
    cdef Py_ssize_t t = aa.shape[0]
    cdef Py_ssize_t n = aa.shape[1]
    cdef cnp.ndarray[zcomplex, ndim=3, mode="c"] out = \
        np.empty((t, n, n), dtype=np.complex128)
    cdef Py_ssize_t i
    with nogil:
        for i in range(t):
            _zmatmul(&aa[i, 0, 0], &bb[i, 0, 0], &out[i, 0, 0], n)
    return out


def weighted_sandwich_sum(lefts, mid, rights, weights):
    if np.asarray(lefts).shape[1] > CROSSOVER:
        return pyref.weighted_sandwich_sum(lefts, mid, rights, weights)
    cdef cnp.ndarray[zcomplex, ndim=3, mode="c"] ll = \
        np.ascontiguousarray(lefts, dtype=np.complex128)
    cdef cnp.ndarray[zcomplex, ndim=3, mode="c"] rr = \
        np.ascontiguousarray(rights, dtype=np.complex128)
    cdef cnp.ndarray[cnp.float64_t, ndim=1, mode="c"] ww = \
        np.ascontiguousarray(weights, dtype=np.float64)
    cdef Py_ssize_t t = ll.shape[0]
    cdef Py_ssize_t n = ll.shape[1]
    cdef bint has_mid = mid is not None
    cdef cnp.ndarray[zcomplex, ndim=2, mode="c"] mm
    if has_mid:
        mm = np.ascontiguousarray(mid, dtype=np.complex128)
    else:
        mm = np.empty((0, 0), dtype=np.complex128)
    cdef cnp.ndarray[zcomplex, ndim=2, mode="c"] acc = \
        np.zeros((n, n), dtype=np.complex128)
    cdef cnp.ndarray[zcomplex, ndim=1, mode="c"] s1 = \
        np.empty(n * n, dtype=np.complex128)
    cdef cnp.ndarray[zcomplex, ndim=1, mode="c"] s2 = \
        np.empty(n * n, dtype=np.complex128)
    cdef Py_ssize_t i, k
    cdef double w
    with nogil:
        for i in range(t):
            w = ww[i]
            if w == 0.0:
                continue
            if has_mid:
                _zmatmul(&ll[i, 0, 0], &mm[0, 0], &s1[0], n)
                _zmatmul(&s1[0], &rr[i, 0, 0], &s2[0], n)
            else:
                _zmatmul(&ll[i, 0, 0], &rr[i, 0, 0], &s2[0], n)
            for k in range(n * n):
                (&acc[0, 0])[k] = (&acc[0, 0])[k] + w * s2[k]
    return acc
