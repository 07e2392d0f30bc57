"""Pure-Python matrix kernels over a finite field.

Matrices are lists of row lists holding integer element codes; tables
come in as a :class:`~orbitcode._kernels.tables.FieldTables`.  The
compiled backend in ``_core.pyx`` implements the same four functions
with identical semantics.
"""

from __future__ import annotations


def matmul(a, b, t):
    """Product of an r x m and an m x c code matrix."""
    add = t.add_list
    mul = t.mul_list
    m = len(b)
    c = len(b[0])
    out = []
    for row in a:
        acc = [0] * c
        for j in range(m):
            x = row[j]
            if x == 0:
                continue
            mx = mul[x]
            brow = b[j]
            for l in range(c):
                y = brow[l]
                if y:
                    acc[l] = add[acc[l]][mx[y]]
        out.append(acc)
    return out


def rref(a, t):
    """Reduced row echelon form.

    Returns ``(rows, rank, pivots)`` where pivots are 0-based column
    indices in increasing order.
    """
    add = t.add_list
    mul = t.mul_list
    neg = t.neg_list
    inv = t.inv_list
    m = [list(row) for row in a]
    nrows = len(m)
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pin = -1
        for i in range(r, nrows):
            if m[i][col]:
                pin = i
                break
        if pin < 0:
            continue
        if pin != r:
            m[r], m[pin] = m[pin], m[r]
        piv = m[r][col]
        if piv != 1:
            s = inv[piv]
            ms = mul[s]
            row = m[r]
            for l in range(col, ncols):
                row[l] = ms[row[l]]
        prow = m[r]
        for i in range(nrows):
            if i == r:
                continue
            f = m[i][col]
            if f == 0:
                continue
            mf = mul[neg[f]]
            row = m[i]
            for l in range(col, ncols):
                v = prow[l]
                if v:
                    row[l] = add[row[l]][mf[v]]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return m, r, tuple(pivots)


def det(a, t):
    """Determinant of a square code matrix, as a code."""
    add = t.add_list
    mul = t.mul_list
    neg = t.neg_list
    inv = t.inv_list
    m = [list(row) for row in a]
    n = len(m)
    d = 1
    for col in range(n):
        pin = -1
        for i in range(col, n):
            if m[i][col]:
                pin = i
                break
        if pin < 0:
            return 0
        if pin != col:
            m[col], m[pin] = m[pin], m[col]
            d = neg[d]
        piv = m[col][col]
        d = mul[d][piv]
        mf = mul[inv[piv]]
        prow = m[col]
        for i in range(col + 1, n):
            f = m[i][col]
            if f == 0:
                continue
            g = neg[mf[f]]
            mg = mul[g]
            row = m[i]
            for l in range(col, n):
                v = prow[l]
                if v:
                    row[l] = add[row[l]][mg[v]]
    return d


def batch_minors(a, row_sets, col_sets, t):
    """Determinants of all submatrices ``a[S][T]``.

    ``row_sets`` and ``col_sets`` are sequences of equal-length 0-based
    index tuples; the result is a ``len(row_sets) x len(col_sets)``
    nested list of codes.
    """
    out = []
    for rows in row_sets:
        picked = [a[i] for i in rows]
        line = []
        for cols in col_sets:
            sub = [[row[j] for j in cols] for row in picked]
            line.append(det(sub, t))
        out.append(line)
    return out
