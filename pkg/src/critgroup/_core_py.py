"""Pure-Python exact integer matrix kernels.

Twin of the compiled module ``_core_cy``; ``critgroup.kernels`` picks
whichever is available.  Matrices are lists of lists of Python ints, so
every value is arbitrary precision and nothing here touches floating
point.  Inputs are never mutated.
"""

IMPLEMENTATION = "python"


def det_bareiss(rows):
    """Exact determinant of a square integer matrix by fraction-free
    (Bareiss) elimination.  Intermediate values stay bounded by minors of
    the input, and every division is exact."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for p in range(n - 1):
        if a[p][p] == 0:
            for r in range(p + 1, n):
                if a[r][p]:
                    a[p], a[r] = a[r], a[p]
                    sign = -sign
                    break
            else:
                return 0
        ap = a[p]
        piv = ap[p]
        for i in range(p + 1, n):
            ai = a[i]
            aip = ai[p]
            for j in range(p + 1, n):
                ai[j] = (piv * ai[j] - aip * ap[j]) // prev
            ai[p] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def adjugate_times(rows, rhs):
    """Fraction-free Gauss-Jordan solve of M X = det(M) B.

    Returns ``(det, X)`` where ``X = adjugate(M) @ B`` exactly; ``rhs``
    is an n x k list of rows.  Raises ValueError on singular input.
    The one pass yields the determinant and, with B = I, the adjugate.
    """
    n = len(rows)
    if n == 0:
        return 1, []
    k = len(rhs[0])
    a = [list(rows[i]) + list(rhs[i]) for i in range(n)]
    w = n + k
    sign = 1
    prev = 1
    for p in range(n):
        if a[p][p] == 0:
            for r in range(p + 1, n):
                if a[r][p]:
                    a[p], a[r] = a[r], a[p]
                    sign = -sign
                    break
            else:
                raise ValueError("singular matrix")
        ap = a[p]
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
                # previously pivoted diagonals rescale to the new pivot
                ai[i] = piv
        prev = piv
    det = sign * a[n - 1][n - 1]
    if sign == 1:
        x = [a[i][n:] for i in range(n)]
    else:
        x = [[-v for v in a[i][n:]] for i in range(n)]
    return det, x


def snf_diagonal(rows):
    """Diagonal of the Smith normal form: nonnegative invariant factors
    with each dividing the next, zeros trailing.

    Pivot rule: nonzero entry of minimal absolute value in the trailing
    submatrix, ties broken by lowest (row, col); this makes the output
    deterministic.
    """
    n = len(rows)
    m = len(rows[0]) if n else 0
    a = [list(r) for r in rows]
    size = min(n, m)
    t = 0
    while t < size:
        pr = -1
        pc = -1
        best = 0
        for i in range(t, n):
            ai = a[i]
            for j in range(t, m):
                v = ai[j]
                if v:
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
            if v:
                q = v // piv
                if q:
                    for j in range(t, m):
                        ai[j] -= q * at[j]
                if ai[t]:
                    dirty = True
        for j in range(t + 1, m):
            v = at[j]
            if v:
                q = v // piv
                if q:
                    for i in range(t, n):
                        a[i][j] -= q * a[i][t]
                if at[j]:
                    dirty = True
        if dirty:
            continue
        folded = False
        for i in range(t + 1, n):
            ai = a[i]
            for j in range(t + 1, m):
                if ai[j] % piv:
                    # fold the offending row into row t so a smaller
                    # pivot (a gcd) appears on the next sweep
                    for j2 in range(t, m):
                        at[j2] += ai[j2]
                    folded = True
                    break
            if folded:
                break
        if folded:
            continue
        t += 1
    diag = []
    for i in range(size):
        if i < t:
            v = a[i][i]
            diag.append(-v if v < 0 else v)
        else:
            diag.append(0)
    return diag
