# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels (operator normalization, SNF)."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

cdef extern from *:
    bint mul_overflow "__builtin_mul_overflow" (long long a, long long b, long long *res) nogil
    bint sub_overflow "__builtin_sub_overflow" (long long a, long long b, long long *res) nogil

cdef enum:
    FACE = 0
    DEGEN = 1


def normalize_word(word):
    cdef Py_ssize_t n = len(word)
    cdef int *kind = <int *> malloc((n + 1) * sizeof(int))
    cdef long *idx = <long *> malloc((n + 1) * sizeof(long))
    cdef Py_ssize_t p, q, L
    cdef int k1, k2
    cdef long a, b
    if kind == NULL or idx == NULL:
        free(kind); free(idx)
        raise MemoryError()
    try:
        for p in range(n):
            kind[p] = word[p][0]
            idx[p] = word[p][1]
        L = n
        p = 0
        while p < L - 1:
            k1 = kind[p]; k2 = kind[p + 1]; a = idx[p]; b = idx[p + 1]
            if k1 == FACE and k2 == FACE:
                if a >= b:
                    idx[p] = b; idx[p + 1] = a + 1
                    p = p - 1 if p > 0 else 0
                    continue
            elif k1 == DEGEN and k2 == DEGEN:
                if a <= b:
                    idx[p] = b + 1; idx[p + 1] = a
                    p = p - 1 if p > 0 else 0
                    continue
            elif k1 == FACE and k2 == DEGEN:
                if a < b:
                    kind[p] = DEGEN; idx[p] = b - 1; kind[p + 1] = FACE; idx[p + 1] = a
                elif a == b or a == b + 1:
                    for q in range(p, L - 2):
                        kind[q] = kind[q + 2]; idx[q] = idx[q + 2]
                    L -= 2
                else:
                    kind[p] = DEGEN; idx[p] = b; kind[p + 1] = FACE; idx[p + 1] = a - 1
                p = p - 1 if p > 0 else 0
                continue
            p += 1
        degens = tuple([idx[q] for q in range(L) if kind[q] == DEGEN])
        faces = tuple([idx[q] for q in range(L) if kind[q] == FACE])
        return degens, faces
    finally:
        free(kind)
        free(idx)


cdef inline long long _trunc_div(long long x, long long y) nogil:
    # C division truncates toward zero; any remainder is smaller than |y|
    return x / y


cdef long long _llabs(long long x) nogil:
    return -x if x < 0 else x


def snf_diagonal_int64(rows, Py_ssize_t ncols):
    """Dense int64 elimination; returns None when an entry would overflow."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, j, r, c, pr, pc
    cdef long long *a
    cdef char *row_on
    cdef char *col_on
    cdef long long pv, q, best, v, t
    cdef bint clean, overflow = False
    if nrows == 0 or ncols == 0:
        return []
    a = <long long *> malloc(nrows * ncols * sizeof(long long))
    row_on = <char *> malloc(nrows)
    col_on = <char *> malloc(ncols)
    if a == NULL or row_on == NULL or col_on == NULL:
        free(a); free(row_on); free(col_on)
        raise MemoryError()
    memset(a, 0, nrows * ncols * sizeof(long long))
    memset(row_on, 1, nrows)
    memset(col_on, 1, ncols)
    diag = []
    try:
        for i in range(nrows):
            for j, val in rows[i].items():
                if not (-(1 << 62) < val < (1 << 62)):
                    return None
                a[i * ncols + j] = val
        while True:
            best = 0
            pr = -1
            pc = -1
            for i in range(nrows):
                if not row_on[i]:
                    continue
                for j in range(ncols):
                    if col_on[j] and a[i * ncols + j] != 0:
                        v = _llabs(a[i * ncols + j])
                        if pr < 0 or v < best:
                            best = v; pr = i; pc = j
            if pr < 0:
                break
            pv = a[pr * ncols + pc]
            clean = True
            for r in range(nrows):
                if r == pr or not row_on[r] or a[r * ncols + pc] == 0:
                    continue
                q = _trunc_div(a[r * ncols + pc], pv)
                if q != 0:
                    for c in range(ncols):
                        if col_on[c] and a[pr * ncols + c] != 0:
                            if mul_overflow(q, a[pr * ncols + c], &t) or sub_overflow(a[r * ncols + c], t, &v):
                                overflow = True
                                break
                            a[r * ncols + c] = v
                    if overflow:
                        return None
                if a[r * ncols + pc] != 0:
                    clean = False
            for c in range(ncols):
                if c == pc or not col_on[c] or a[pr * ncols + c] == 0:
                    continue
                q = _trunc_div(a[pr * ncols + c], pv)
                if q != 0:
                    for r in range(nrows):
                        if row_on[r] and a[r * ncols + pc] != 0:
                            if mul_overflow(q, a[r * ncols + pc], &t) or sub_overflow(a[r * ncols + c], t, &v):
                                overflow = True
                                break
                            a[r * ncols + c] = v
                    if overflow:
                        return None
                if a[pr * ncols + c] != 0:
                    clean = False
            if clean:
                diag.append(_llabs(pv))
                row_on[pr] = 0
                col_on[pc] = 0
        return diag
    finally:
        free(a); free(row_on); free(col_on)
