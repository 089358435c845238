# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels on flattened orbit matrices.

Same contract as ``_pykernel``: row-major tuples, 0-based generator index,
``None`` for zero.
"""

from libc.stdlib cimport malloc, free

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline long* _load(tuple a, Py_ssize_t size) except NULL:
    cdef long* buf = <long*> malloc(size * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t t
    for t in range(size):
        buf[t] = a[t]
    return buf


cdef inline tuple _dump(long* buf, Py_ssize_t size):
    cdef Py_ssize_t t
    out = [0] * size
    for t in range(size):
        out[t] = buf[t]
    return tuple(out)


def left_e(tuple a, int n, int k):
    cdef int base = (k + 1) * n, p
    for p in range(n - 1, -1, -1):
        if a[base + p]:
            x = list(a)
            x[k * n + p] += 1
            x[base + p] -= 1
            return tuple(x)
    return None


def left_f(tuple a, int n, int k):
    cdef int base = k * n, p
    for p in range(n):
        if a[base + p]:
            x = list(a)
            x[base + p] -= 1
            x[base + n + p] += 1
            return tuple(x)
    return None


def right_f(tuple a, int n, int k):
    cdef int p
    for p in range(n - 1, -1, -1):
        if a[p * n + k + 1]:
            x = list(a)
            x[p * n + k] += 1
            x[p * n + k + 1] -= 1
            return tuple(x)
    return None


def right_e(tuple a, int n, int k):
    cdef int p
    for p in range(n):
        if a[p * n + k]:
            x = list(a)
            x[p * n + k] -= 1
            x[p * n + k + 1] += 1
            return tuple(x)
    return None


def row_sums(tuple a, int n):
    cdef int i, j
    cdef long s
    out = []
    for i in range(n):
        s = 0
        for j in range(n):
            s += <long> a[i * n + j]
        out.append(s)
    return tuple(out)


def col_sums(tuple a, int n):
    cdef int i, j
    cdef long s
    out = []
    for j in range(n):
        s = 0
        for i in range(n):
            s += <long> a[i * n + j]
        out.append(s)
    return tuple(out)


cdef void _e_degree(long* a, int n, long* out):
    cdef int k, l, m
    cdef long s
    for k in range(n - 1):
        s = 0
        for l in range(k + 1):
            for m in range(k + 1, n):
                s += a[l * n + m]
        out[k] = s


cdef void _f_degree(long* a, int n, long* out):
    cdef int k, l, m
    cdef long s
    for k in range(n - 1):
        s = 0
        for l in range(k + 1, n):
            for m in range(k + 1):
                s += a[l * n + m]
        out[k] = s


def e_degree(tuple a, int n):
    cdef long* buf = _load(a, n * n)
    cdef long* out = <long*> malloc(max(n - 1, 1) * sizeof(long))
    try:
        _e_degree(buf, n, out)
        return _dump(out, n - 1)
    finally:
        free(buf)
        free(out)


def f_degree(tuple a, int n):
    cdef long* buf = _load(a, n * n)
    cdef long* out = <long*> malloc(max(n - 1, 1) * sizeof(long))
    try:
        _f_degree(buf, n, out)
        return _dump(out, n - 1)
    finally:
        free(buf)
        free(out)


cdef bint _s0_inplace(long* a, long* x, int n):
    """Apply the monomial word of a to x in place; False if it dies."""
    cdef int s, l, p, t
    cdef long times, row_sum_b, col_sum_a
    for p in range(n):
        col_sum_a = 0
        row_sum_b = 0
        for t in range(n):
            col_sum_a += a[t * n + p]
            row_sum_b += x[p * n + t]
        if col_sum_a != row_sum_b:
            return False
    for s in range(n - 2, -1, -1):
        for l in range(s, n - 1):
            times = 0
            for p in range(l + 1, n):
                times += a[p * n + s]
            while times > 0:
                for p in range(n):
                    if x[l * n + p]:
                        x[l * n + p] -= 1
                        x[(l + 1) * n + p] += 1
                        break
                else:
                    return False
                times -= 1
    for s in range(n - 1):
        for l in range(s, -1, -1):
            times = 0
            for p in range(l + 1):
                times += a[p * n + s + 1]
            while times > 0:
                for p in range(n - 1, -1, -1):
                    if x[(l + 1) * n + p]:
                        x[l * n + p] += 1
                        x[(l + 1) * n + p] -= 1
                        break
                else:
                    return False
                times -= 1
    return True


def s0_product(tuple a, tuple b, int n):
    cdef Py_ssize_t size = n * n
    cdef long* abuf = _load(a, size)
    cdef long* xbuf = _load(b, size)
    try:
        if not _s0_inplace(abuf, xbuf, n):
            return None
        return _dump(xbuf, size)
    finally:
        free(abuf)
        free(xbuf)


def star_product(tuple a, tuple b, int n):
    cdef Py_ssize_t size = n * n
    cdef long* abuf = _load(a, size)
    cdef long* bbuf = _load(b, size)
    cdef long* xbuf = _load(b, size)
    cdef long* deg = <long*> malloc(3 * max(n - 1, 1) * sizeof(long))
    cdef int k
    try:
        if not _s0_inplace(abuf, xbuf, n):
            return None
        _e_degree(abuf, n, deg)
        _e_degree(bbuf, n, deg + (n - 1))
        _e_degree(xbuf, n, deg + 2 * (n - 1))
        for k in range(n - 1):
            if deg[k] + deg[n - 1 + k] != deg[2 * (n - 1) + k]:
                return None
        return _dump(xbuf, size)
    finally:
        free(abuf)
        free(bbuf)
        free(xbuf)
        free(deg)


def assoc_violation(table):
    cdef cnp.ndarray[cnp.int64_t, ndim=2] arr = np.ascontiguousarray(table, dtype=np.int64)
    cdef cnp.int64_t[:, ::1] p = arr
    cdef Py_ssize_t size = p.shape[0] - 1
    cdef Py_ssize_t a, b, c
    cdef cnp.int64_t ab, bc
    for a in range(size):
        for b in range(size):
            ab = p[a, b]
            for c in range(size):
                bc = p[b, c]
                if p[ab, c] != p[a, bc]:
                    return (int(a), int(b), int(c))
    return None
