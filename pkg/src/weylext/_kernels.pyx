# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) kernels used by the hyperalgebra oracle."""
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t


cdef int64_t _inv(int64_t a, int64_t p):
    cdef int64_t t = 0, nt = 1, r = p, nr = a, q, tmp
    while nr:
        q = r // nr
        tmp = t - q * nt; t = nt; nt = tmp
        tmp = r - q * nr; r = nr; nr = tmp
    if t < 0:
        t += p
    return t


def rank_mod_p(rows, Py_ssize_t ncols, int64_t p):
    """Rank of an integer matrix over GF(p), p prime below 2**31."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef int64_t *a = <int64_t *> malloc(nrows * ncols * sizeof(int64_t))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, k, rank = 0, piv
    cdef int64_t x, inv, f
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                x = row[j] % p
                a[i * ncols + j] = x
        for j in range(ncols):
            if rank == nrows:
                break
            piv = -1
            for i in range(rank, nrows):
                if a[i * ncols + j]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for k in range(j, ncols):
                    x = a[piv * ncols + k]
                    a[piv * ncols + k] = a[rank * ncols + k]
                    a[rank * ncols + k] = x
            inv = _inv(a[rank * ncols + j], p)
            for k in range(j, ncols):
                a[rank * ncols + k] = (a[rank * ncols + k] * inv) % p
            for i in range(rank + 1, nrows):
                f = a[i * ncols + j]
                if f:
                    for k in range(j, ncols):
                        x = (a[i * ncols + k] - f * a[rank * ncols + k]) % p
                        a[i * ncols + k] = x + p if x < 0 else x
            rank += 1
        return rank
    finally:
        free(a)


def pascal_mod(Py_ssize_t n, int64_t p):
    """Rows 0..n of Pascal's triangle reduced mod p."""
    cdef Py_ssize_t m, k
    table = [[1]]
    cdef list prev, row
    for m in range(1, n + 1):
        prev = table[m - 1]
        row = [1] * (m + 1)
        for k in range(1, m):
            row[k] = (<int64_t> prev[k - 1] + <int64_t> prev[k]) % p
        table.append(row)
    return table
