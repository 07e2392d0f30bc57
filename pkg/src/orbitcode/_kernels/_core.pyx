# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled matrix kernels over a finite field.

Same four entry points and semantics as the pure backend: matrices in
and out are nested lists of integer codes, tables arrive as a
FieldTables whose numpy arrays are read through typed memoryviews.
"""

import numpy as np

ctypedef long long i64


cdef i64 _det_inplace(i64[:, ::1] m, Py_ssize_t n,
                      const i64[:, ::1] add, const i64[:, ::1] mul,
                      const i64[::1] neg, const i64[::1] inv) noexcept:
    cdef Py_ssize_t col, i, l, pin
    cdef i64 d = 1
    cdef i64 piv, f, g, v, tmp
    for col in range(n):
        pin = -1
        for i in range(col, n):
            if m[i, col] != 0:
                pin = i
                break
        if pin < 0:
            return 0
        if pin != col:
            for l in range(n):
                tmp = m[col, l]
                m[col, l] = m[pin, l]
                m[pin, l] = tmp
            d = neg[d]
        piv = m[col, col]
        d = mul[d, piv]
        for i in range(col + 1, n):
            f = m[i, col]
            if f == 0:
                continue
            g = neg[mul[inv[piv], f]]
            for l in range(col, n):
                v = m[col, l]
                if v != 0:
                    m[i, l] = add[m[i, l], mul[g, v]]
    return d


def matmul(a, b, t):
    """Product of an r x m and an m x c code matrix."""
    cdef i64[:, ::1] am = np.ascontiguousarray(a, dtype=np.int64)
    cdef i64[:, ::1] bm = np.ascontiguousarray(b, dtype=np.int64)
    cdef const i64[:, ::1] add = t.add
    cdef const i64[:, ::1] mul = t.mul
    cdef Py_ssize_t r = am.shape[0]
    cdef Py_ssize_t mm = am.shape[1]
    cdef Py_ssize_t c = bm.shape[1]
    out_np = np.zeros((r, c), dtype=np.int64)
    cdef i64[:, ::1] out = out_np
    cdef Py_ssize_t i, j, l
    cdef i64 x, y
    for i in range(r):
        for j in range(mm):
            x = am[i, j]
            if x == 0:
                continue
            for l in range(c):
                y = bm[j, l]
                if y != 0:
                    out[i, l] = add[out[i, l], mul[x, y]]
    return out_np.tolist()


def rref(a, t):
    """Reduced row echelon form; returns (rows, rank, pivots)."""
    m_np = np.ascontiguousarray(a, dtype=np.int64)
    cdef i64[:, ::1] m = m_np
    cdef const i64[:, ::1] add = t.add
    cdef const i64[:, ::1] mul = t.mul
    cdef const i64[::1] neg = t.neg
    cdef const i64[::1] inv = t.inv
    cdef Py_ssize_t nrows = m.shape[0]
    cdef Py_ssize_t ncols = m.shape[1]
    cdef Py_ssize_t r = 0
    cdef Py_ssize_t col, i, l, pin
    cdef i64 piv, s, f, g, v, tmp
    pivots = []
    for col in range(ncols):
        pin = -1
        for i in range(r, nrows):
            if m[i, col] != 0:
                pin = i
                break
        if pin < 0:
            continue
        if pin != r:
            for l in range(ncols):
                tmp = m[r, l]
                m[r, l] = m[pin, l]
                m[pin, l] = tmp
        piv = m[r, col]
        if piv != 1:
            s = inv[piv]
            for l in range(col, ncols):
                m[r, l] = mul[s, m[r, l]]
        for i in range(nrows):
            if i == r:
                continue
            f = m[i, col]
            if f == 0:
                continue
            g = neg[f]
            for l in range(col, ncols):
                v = m[r, l]
                if v != 0:
                    m[i, l] = add[m[i, l], mul[g, v]]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return m_np.tolist(), r, tuple(pivots)


def det(a, t):
    """Determinant of a square code matrix, as a code."""
    m_np = np.ascontiguousarray(a, dtype=np.int64)
    cdef i64[:, ::1] m = m_np
    return int(_det_inplace(m, m.shape[0], t.add, t.mul, t.neg, t.inv))


def batch_minors(a, row_sets, col_sets, t):
    """Determinants of all submatrices a[S][T] as a nested list."""
    if not row_sets or not col_sets:
        return [[] for _ in row_sets]
    cdef i64[:, ::1] am = np.ascontiguousarray(a, dtype=np.int64)
    cdef i64[:, ::1] rs = np.ascontiguousarray(row_sets, dtype=np.int64)
    cdef i64[:, ::1] cs = np.ascontiguousarray(col_sets, dtype=np.int64)
    cdef const i64[:, ::1] add = t.add
    cdef const i64[:, ::1] mul = t.mul
    cdef const i64[::1] neg = t.neg
    cdef const i64[::1] inv = t.inv
    cdef Py_ssize_t nr = rs.shape[0]
    cdef Py_ssize_t nc = cs.shape[0]
    cdef Py_ssize_t k = rs.shape[1]
    out_np = np.zeros((nr, nc), dtype=np.int64)
    cdef i64[:, ::1] out = out_np
    scratch_np = np.empty((k, k), dtype=np.int64)
    cdef i64[:, ::1] scratch = scratch_np
    cdef Py_ssize_t i, j, p, q
    for i in range(nr):
        for j in range(nc):
            for p in range(k):
                for q in range(k):
                    scratch[p, q] = am[rs[i, p], cs[j, q]]
            out[i, j] = _det_inplace(scratch, k, add, mul, neg, inv)
    return out_np.tolist()
