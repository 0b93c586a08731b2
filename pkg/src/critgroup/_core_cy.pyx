# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exact integer matrix kernels.

Same algorithms and contracts as ``_core_py`` (the pure-Python twin);
entries remain Python ints so arithmetic is still arbitrary precision,
but loop and indexing overhead is compiled away.
"""

IMPLEMENTATION = "cython"


def det_bareiss(rows):
    """Exact determinant of a square integer matrix by fraction-free
    (Bareiss) elimination."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef list a = [list(row_) for row_ in rows]
    cdef Py_ssize_t p, i, j, r
    cdef int sign = 1
    cdef list ap, ai
    piv = None
    prev = 1
    for p in range(n - 1):
        ap = a[p]
        if ap[p] == 0:
            for r in range(p + 1, n):
                if a[r][p] != 0:
                    a[p], a[r] = a[r], a[p]
                    ap = a[p]
                    sign = -sign
                    break
            else:
                return 0
        piv = ap[p]
        for i in range(p + 1, n):
            ai = a[i]
            aip = ai[p]
            for j in range(p + 1, n):
                ai[j] = (piv * ai[j] - aip * ap[j]) // prev
            ai[p] = 0
        prev = piv
    ai = a[n - 1]
    if sign == 1:
        return ai[n - 1]
    return -ai[n - 1]


def adjugate_times(rows, rhs):
    """Fraction-free Gauss-Jordan solve of M X = det(M) B.

    Returns ``(det, X)`` with ``X = adjugate(M) @ B`` exactly; raises
    ValueError on singular input.
    """
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1, []
    cdef Py_ssize_t k = len(rhs[0])
    cdef list a = [list(rows[i]) + list(rhs[i]) for i in range(n)]
    cdef Py_ssize_t w = n + k
    cdef int sign = 1
    cdef Py_ssize_t p, i, j, r
    cdef list ap, ai
    prev = 1
    piv = None
    for p in range(n):
        ap = a[p]
        if ap[p] == 0:
            for r in range(p + 1, n):
                if a[r][p] != 0:
                    a[p], a[r] = a[r], a[p]
                    ap = a[p]
                    sign = -sign
                    break
            else:
                raise ValueError("singular matrix")
        piv = ap[p]
        for i in range(n):
            if i == p:
                continue
            ai = a[i]
            aip = ai[p]
            for j in range(p + 1, w):
                ai[j] = (piv * ai[j] - aip * ap[j]) // prev
            ai[p] = 0
            if i < p:
                ai[i] = piv
        prev = piv
    ai = a[n - 1]
    det = ai[n - 1]
    cdef list x
    if sign == 1:
        x = [a[i][n:] for i in range(n)]
        return det, x
    x = [[-v for v in a[i][n:]] for i in range(n)]
    return -det, x


def snf_diagonal(rows):
    """Diagonal of the Smith normal form (nonnegative, divisibility
    chain, zeros trailing).  Pivot: minimal |value|, ties by lowest
    (row, col) -- deterministic output."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t m = len(rows[0]) if n else 0
    cdef list a = [list(row_) for row_ in rows]
    cdef Py_ssize_t size = n if n < m else m
    cdef Py_ssize_t t = 0, pr, pc, i, j, j2
    cdef bint dirty, folded
    cdef list ai, at, row
    while t < size:
        pr = -1
        pc = -1
        best = 0
        for i in range(t, n):
            ai = a[i]
            for j in range(t, m):
                v = ai[j]
                if v != 0:
                    if v < 0:
                        v = -v
                    if pr < 0 or v < best:
                        best = v
                        pr = i
                        pc = j
        if pr < 0:
            break
        if pr != t:
            a[t], a[pr] = a[pr], a[t]
        if pc != t:
            for row in a:
                row[t], row[pc] = row[pc], row[t]
        at = a[t]
        piv = at[t]
        dirty = False
        for i in range(t + 1, n):
            ai = a[i]
            v = ai[t]
            if v != 0:
                q = v // piv
                if q != 0:
                    for j in range(t, m):
                        ai[j] = ai[j] - q * at[j]
                if ai[t] != 0:
                    dirty = True
        for j in range(t + 1, m):
            v = at[j]
            if v != 0:
                q = v // piv
                if q != 0:
                    for i in range(t, n):
                        ai = a[i]
                        ai[j] = ai[j] - q * ai[t]
                if at[j] != 0:
                    dirty = True
        if dirty:
            continue
        folded = False
        for i in range(t + 1, n):
            ai = a[i]
            for j in range(t + 1, m):
                if ai[j] % piv != 0:
                    for j2 in range(t, m):
                        at[j2] = at[j2] + ai[j2]
                    folded = True
                    break
            if folded:
                break
        if folded:
            continue
        t += 1
    cdef list diag = []
    for i in range(size):
        if i < t:
            v = a[i][i]
            diag.append(-v if v < 0 else v)
        else:
            diag.append(0)
    return diag
