# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled dense Gaussian elimination over F_p (p < 2^31)."""

import numpy as np

ctypedef long long i64


cdef i64 _inv(i64 a, i64 p) nogil:
    cdef i64 t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef i64 _eliminate(i64[:, ::1] A, i64 p, bint full, i64[::1] pivots) nogil:
    cdef Py_ssize_t nrows = A.shape[0], ncols = A.shape[1]
    cdef Py_ssize_t r = 0, col, i, j, piv
    cdef i64 f, s, neg
    for col in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if A[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(col, ncols):
                s = A[r, j]
                A[r, j] = A[piv, j]
                A[piv, j] = s
        f = _inv(A[r, col], p)
        if f != 1:
            for j in range(col, ncols):
                A[r, j] = A[r, j] * f % p
        for i in range(0 if full else r + 1, nrows):
            if i == r:
                continue
            f = A[i, col]
            if f == 0:
                continue
            neg = p - f
            for j in range(col, ncols):
                if A[r, j] != 0:
                    A[i, j] = (A[i, j] + neg * A[r, j]) % p
        pivots[r] = col
        r += 1
    return r


def _prepare(mat, p):
    A = np.ascontiguousarray(np.asarray(mat, dtype=np.int64) % p)
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    return A


def rank(mat, long long p):
    """Rank of an integer matrix reduced mod p."""
    A = _prepare(mat, p)
    if A.size == 0:
        return 0
    piv = np.empty(min(A.shape), dtype=np.int64)
    cdef i64[:, ::1] view = A
    cdef i64[::1] pv = piv
    cdef i64 r
    with nogil:
        r = _eliminate(view, p, 0, pv)
    return int(r)


def rref(mat, long long p):
    """Reduced row echelon form mod p: (nonzero rows, pivot columns)."""
    A = _prepare(mat, p)
    if A.size == 0:
        return np.zeros((0, A.shape[1] if A.ndim == 2 else 0), dtype=np.int64), []
    piv = np.empty(min(A.shape), dtype=np.int64)
    cdef i64[:, ::1] view = A
    cdef i64[::1] pv = piv
    cdef i64 r
    with nogil:
        r = _eliminate(view, p, 1, pv)
    return A[:r].copy(), [int(c) for c in piv[:r]]
