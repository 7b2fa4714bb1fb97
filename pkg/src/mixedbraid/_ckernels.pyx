# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counterparts of ``_pykernels``.

Inputs are Python int tuples.  Work is done in int64 when a cheap a priori
bound shows no intermediate can overflow; otherwise ``OverflowError`` is
raised and the dispatcher falls back to the pure-Python kernel.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

cdef long long LIMIT = 1 << 62


cdef int _load(object seq, long long *dst, Py_ssize_t n, long long *amax, Py_ssize_t *nnz) except -1:
    cdef Py_ssize_t i
    cdef long long x, m = 0
    cdef Py_ssize_t z = 0
    for i in range(n):
        obj = seq[i]
        if obj >= LIMIT or obj <= -LIMIT:
            raise OverflowError
        x = obj
        dst[i] = x
        if x != 0:
            z += 1
            if x < 0:
                x = -x
            if x > m:
                m = x
    amax[0] = m
    nnz[0] = z
    return 0


cdef void _reduce(long long *v, list cplan):
    cdef const long long[:] tops
    cdef const long long[:] others
    cdef Py_ssize_t t, r, w, ntop
    cdef long long c
    for step in cplan:
        tops = step[0]
        others = step[1]
        w = step[2]
        ntop = tops.shape[0]
        for t in range(ntop):
            c = v[tops[t]]
            if c != 0:
                v[tops[t]] = 0
                for r in range(w):
                    v[others[t * w + r]] -= c


cdef tuple _emit(long long *v, Py_ssize_t n):
    cdef Py_ssize_t i
    out = [0] * n
    for i in range(n):
        if v[i] != 0:
            out[i] = v[i]
    return tuple(out)


def mul(tuple a, tuple b, Py_ssize_t M, list cplan, int growth):
    cdef long long *va = <long long *> malloc(3 * M * sizeof(long long))
    if va == NULL:
        raise MemoryError
    cdef long long *vb = va + M
    cdef long long *out = va + 2 * M
    cdef long long ma, mb
    cdef Py_ssize_t na, nb, i, j, k
    cdef long long x
    try:
        _load(a, va, M, &ma, &na)
        _load(b, vb, M, &mb, &nb)
        # |conv entry| <= ma*mb*min(na, nb); reduction multiplies by <= growth
        if (<object> ma) * mb * min(na, nb) * growth >= LIMIT:
            raise OverflowError
        memset(out, 0, M * sizeof(long long))
        for i in range(M):
            x = va[i]
            if x == 0:
                continue
            k = i
            for j in range(M):
                if vb[j] != 0:
                    out[k] += x * vb[j]
                k += 1
                if k == M:
                    k = 0
        _reduce(out, cplan)
        return _emit(out, M)
    finally:
        free(va)


def lincomb(tuple a, object sa, tuple b, object sb):
    cdef Py_ssize_t n = len(a)
    if sa >= LIMIT or sa <= -LIMIT or sb >= LIMIT or sb <= -LIMIT:
        raise OverflowError
    cdef long long csa = sa, csb = sb
    cdef long long *va = <long long *> malloc(2 * n * sizeof(long long) + 1)
    if va == NULL:
        raise MemoryError
    cdef long long *vb = va + n
    cdef long long ma, mb
    cdef Py_ssize_t na, nb, i
    try:
        _load(a, va, n, &ma, &na)
        _load(b, vb, n, &mb, &nb)
        if (<object> ma) * abs(sa) + (<object> mb) * abs(sb) >= LIMIT:
            raise OverflowError
        for i in range(n):
            va[i] = va[i] * csa + vb[i] * csb
        return _emit(va, n)
    finally:
        free(va)


def permute_reduce(tuple a, long long mult, Py_ssize_t M, list cplan, int growth):
    cdef long long *out = <long long *> malloc(M * sizeof(long long))
    if out == NULL:
        raise MemoryError
    cdef Py_ssize_t na, k
    cdef long long ma
    try:
        _load(a, out, M, &ma, &na)
        if (<object> ma) * growth >= LIMIT:
            raise OverflowError
        tmp = [0] * M
        for k in range(M):
            if out[k] != 0:
                tmp[(k * mult) % M] = out[k]
        for k in range(M):
            out[k] = tmp[k]
        _reduce(out, cplan)
        return _emit(out, M)
    finally:
        free(out)
