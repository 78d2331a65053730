# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Row reduction over GF(p) on int64 matrices (compiled kernel)."""

import numpy as np
cimport numpy as cnp

ctypedef long long i64


cdef inline i64 _inv(i64 a, i64 p) nogil:
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


def rref_inplace(cnp.int64_t[:, ::1] a, long long p):
    """Reduce ``a`` (entries in [0, p)) to reduced row echelon form in place.

    Returns the list of pivot columns.
    """
    cdef Py_ssize_t nrows = a.shape[0], ncols = a.shape[1]
    cdef Py_ssize_t row = 0, col, i, k, piv
    cdef i64 inv, f
    cdef cnp.int64_t[::1] pivots = np.empty(min(nrows, ncols), dtype=np.int64)
    with nogil:
        for col in range(ncols):
            if row >= nrows:
                break
            piv = -1
            for i in range(row, nrows):
                if a[i, col] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != row:
                for k in range(col, ncols):
                    f = a[piv, k]
                    a[piv, k] = a[row, k]
                    a[row, k] = f
            inv = _inv(a[row, col], p)
            if inv != 1:
                for k in range(col, ncols):
                    a[row, k] = (a[row, k] * inv) % p
            for i in range(nrows):
                if i == row:
                    continue
                f = a[i, col]
                if f == 0:
                    continue
                for k in range(col, ncols):
                    if a[row, k] != 0:
                        a[i, k] = (a[i, k] - f * a[row, k]) % p
                        if a[i, k] < 0:
                            a[i, k] += p
            pivots[row] = col
            row += 1
    return [int(pivots[i]) for i in range(row)]
