# cython: language_level=3
"""Compiled twin of ``arrdmod._rref_py``.

Same fraction-free elimination over Python's arbitrary-precision integers;
Cython only removes interpreter overhead from the loops, so results are
bit-identical to the pure kernels.
"""


def rref_scaled(rows):
    """See ``arrdmod._rref_py.rref_scaled``."""
    cdef Py_ssize_t n_rows, n_cols, cur, col, sel, i, j
    mat = [list(row) for row in rows]
    n_rows = len(mat)
    n_cols = len(mat[0]) if n_rows else 0
    pivots = []
    prev = 1
    cur = 0
    for col in range(n_cols):
        if cur == n_rows:
            break
        sel = -1
        for i in range(cur, n_rows):
            if mat[i][col] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != cur:
            mat[sel], mat[cur] = mat[cur], mat[sel]
        piv_row = mat[cur]
        piv = piv_row[col]
        for i in range(n_rows):
            if i == cur:
                continue
            row = mat[i]
            f = row[col]
            if f == 0:
                if prev != 1:
                    for j in range(n_cols):
                        row[j] = piv * row[j] // prev
                elif piv != 1:
                    for j in range(n_cols):
                        row[j] = piv * row[j]
                continue
            for j in range(n_cols):
                row[j] = (piv * row[j] - f * piv_row[j]) // prev
        prev = piv
        pivots.append(col)
        cur += 1
    return mat, prev, pivots


def pivot_columns(rows):
    """See ``arrdmod._rref_py.pivot_columns``."""
    cdef Py_ssize_t n_rows, n_cols, cur, col, sel, i, j
    mat = [list(row) for row in rows]
    n_rows = len(mat)
    n_cols = len(mat[0]) if n_rows else 0
    pivots = []
    prev = 1
    cur = 0
    for col in range(n_cols):
        if cur == n_rows:
            break
        sel = -1
        for i in range(cur, n_rows):
            if mat[i][col] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != cur:
            mat[sel], mat[cur] = mat[cur], mat[sel]
        piv_row = mat[cur]
        piv = piv_row[col]
        for i in range(cur + 1, n_rows):
            row = mat[i]
            f = row[col]
            row[col] = 0
            if f == 0:
                if prev != 1:
                    for j in range(col + 1, n_cols):
                        row[j] = piv * row[j] // prev
                elif piv != 1:
                    for j in range(col + 1, n_cols):
                        row[j] = piv * row[j]
                continue
            for j in range(col + 1, n_cols):
                row[j] = (piv * row[j] - f * piv_row[j]) // prev
        prev = piv
        pivots.append(col)
        cur += 1
    return pivots
