# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled F2 support kernels.

Supports are strictly increasing tuples of integer numerators sharing one
denominator. Both functions mirror ``_pykernels`` exactly.
"""

from libc.stdlib cimport free, malloc, qsort

ctypedef long long i64

# keeps every pairwise sum inside i64
cdef i64 _LIMIT = 1LL << 61


cdef int _cmp_i64(const void* a, const void* b) noexcept nogil:
    cdef i64 x = (<const i64*>a)[0]
    cdef i64 y = (<const i64*>b)[0]
    return (x > y) - (x < y)


cdef tuple _to_tuple(i64* buf, Py_ssize_t n):
    cdef Py_ssize_t k
    out = [None] * n
    for k in range(n):
        out[k] = buf[k]
    return tuple(out)


cdef i64* _load(tuple a, Py_ssize_t n) except NULL:
    cdef i64* buf = <i64*>malloc((n if n > 0 else 1) * sizeof(i64))
    cdef Py_ssize_t k
    if buf == NULL:
        raise MemoryError()
    try:
        for k in range(n):
            buf[k] = a[k]
            if buf[k] > _LIMIT or buf[k] < -_LIMIT:
                raise OverflowError("numerator outside kernel range")
    except OverflowError:
        free(buf)
        raise
    return buf


def xor_merge(tuple a, tuple b):
    """Symmetric difference of two sorted supports."""
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na == 0:
        return b
    if nb == 0:
        return a
    cdef i64* x = _load(a, na)
    cdef i64* y
    try:
        y = _load(b, nb)
    except OverflowError:
        free(x)
        raise
    cdef i64* out = <i64*>malloc((na + nb) * sizeof(i64))
    cdef Py_ssize_t i = 0, j = 0, n = 0
    with nogil:
        while i < na and j < nb:
            if x[i] < y[j]:
                out[n] = x[i]; n += 1; i += 1
            elif y[j] < x[i]:
                out[n] = y[j]; n += 1; j += 1
            else:
                i += 1; j += 1
        while i < na:
            out[n] = x[i]; n += 1; i += 1
        while j < nb:
            out[n] = y[j]; n += 1; j += 1
    result = _to_tuple(out, n)
    free(x); free(y); free(out)
    return result


def mul_mod2(tuple a, tuple b, cap=None):
    """Support of the F2 product; sums above ``cap`` are discarded."""
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return ()
    cdef bint capped = cap is not None
    cdef i64 c = cap if capped else 0
    cdef i64* x = _load(a, na)
    cdef i64* y
    try:
        y = _load(b, nb)
    except OverflowError:
        free(x)
        raise
    cdef i64* sums = <i64*>malloc(na * nb * sizeof(i64))
    cdef Py_ssize_t i, j, n = 0, m = 0, run
    cdef i64 s
    with nogil:
        for i in range(na):
            for j in range(nb):
                s = x[i] + y[j]
                if capped and s > c:
                    break
                sums[n] = s
                n += 1
        qsort(sums, n, sizeof(i64), _cmp_i64)
        i = 0
        while i < n:
            run = 1
            while i + run < n and sums[i + run] == sums[i]:
                run += 1
            if run & 1:
                sums[m] = sums[i]
                m += 1
            i += run
    result = _to_tuple(sums, m)
    free(x); free(y); free(sums)
    return result
