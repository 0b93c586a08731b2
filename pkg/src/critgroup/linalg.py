"""Arbitrary-precision integer matrix algebra.

Everything here is exact: determinants and adjugates via fraction-free
elimination, Smith normal form with optional unimodular transforms, and
integer linear solving.  The heavy loops live in ``critgroup.kernels``
(compiled when available); this module adds validation, the transform
bookkeeping, and derived quantities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import kernels


@dataclass(frozen=True)
class SmithForm:
    """Invariant-factor diagonal d1 | d2 | ... (nonnegative, zeros
    trailing) plus, when requested, unimodular left/right transforms with
    left @ M @ right equal to the diagonal matrix exactly."""

    diag: tuple[int, ...]
    left: tuple[tuple[int, ...], ...] | None = None
    right: tuple[tuple[int, ...], ...] | None = None

    @property
    def nontrivial_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diag if d > 1)


def _require_square(m):
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("matrix must be square")
    return n


def determinant(m: list[list[int]]) -> int:
    """Exact determinant (fraction-free elimination)."""
    _require_square(m)
    return kernels.det_bareiss(m)


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def adjugate(m: list[list[int]]) -> list[list[int]]:
    """Adjugate C with M @ C = C @ M = det(M) I exactly.  Raises
    ValueError for singular input."""
    n = _require_square(m)
    _, adj = kernels.adjugate_times(m, identity(n))
    return adj


def det_and_adjugate(m: list[list[int]]) -> tuple[int, list[list[int]]]:
    """Both quantities from a single elimination pass."""
    n = _require_square(m)
    return kernels.adjugate_times(m, identity(n))


def adjugate_column(m: list[list[int]], col: int) -> tuple[int, list[int]]:
    """(det, column ``col`` of the adjugate) without forming the rest."""
    n = _require_square(m)
    rhs = [[1] if i == col else [0] for i in range(n)]
    det, x = kernels.adjugate_times(m, rhs)
    return det, [row[0] for row in x]


def matvec(m: list[list[int]], v: list[int]) -> list[int]:
    return [sum(r * x for r, x in zip(row, v)) for row in m]


def solve_integer(m: list[list[int]], b: list[int]) -> list[int] | None:
    """Unique rational solution of M x = b when it is integral, else
    None.  M must be square and nonsingular.

    Forward elimination is fraction-free Bareiss; back substitution runs
    over exact rationals.  (Deliberately not implemented through the
    adjugate, so it can serve as an independent route in cross-checks.)
    """
    n = _require_square(m)
    if len(b) != n:
        raise ValueError("dimension mismatch")
    a = [list(m[i]) + [b[i]] for i in range(n)]
    prev = 1
    for p in range(n - 1):
        if a[p][p] == 0:
            for r in range(p + 1, n):
                if a[r][p]:
                    a[p], a[r] = a[r], a[p]
                    break
            else:
                raise ValueError("singular matrix")
        ap = a[p]
        piv = ap[p]
        for i in range(p + 1, n):
            ai = a[i]
            aip = ai[p]
            for j in range(p + 1, n + 1):
                ai[j] = (piv * ai[j] - aip * ap[j]) // prev
            ai[p] = 0
        prev = piv
    if a[n - 1][n - 1] == 0:
        raise ValueError("singular matrix")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(a[i][n])
        for j in range(i + 1, n):
            s -= a[i][j] * x[j]
        x[i] = s / a[i][i]
    if all(f.denominator == 1 for f in x):
        return [int(f) for f in x]
    return None


def smith_normal_form(m: list[list[int]], with_transforms: bool = False) -> SmithForm:
    """Smith normal form with deterministic pivoting (minimal |entry|,
    ties by lowest (row, col))."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    for row in m:
        if len(row) != cols:
            raise ValueError("matrix must be rectangular")
    if not with_transforms:
        return SmithForm(tuple(kernels.snf_diagonal(m)))
    diag, left, right = _snf_transforms(m, rows, cols)
    return SmithForm(
        tuple(diag),
        tuple(tuple(r) for r in left),
        tuple(tuple(r) for r in right),
    )


def _snf_transforms(m, n, cols):
    # same elimination as kernels.snf_diagonal, mirroring every row
    # operation into L and every column operation into R
    a = [list(r) for r in m]
    left = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    right = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]
    size = min(n, cols)
    t = 0
    while t < size:
        pr = pc = -1
        best = 0
        for i in range(t, n):
            for j in range(t, cols):
                v = a[i][j]
                if v:
                    if v < 0:
                        v = -v
                    if pr < 0 or v < best:
                        best, pr, pc = v, i, j
        if pr < 0:
            break
        if pr != t:
            a[t], a[pr] = a[pr], a[t]
            left[t], left[pr] = left[pr], left[t]
        if pc != t:
            for row in a:
                row[t], row[pc] = row[pc], row[t]
            for row in right:
                row[t], row[pc] = row[pc], row[t]
        piv = a[t][t]
        dirty = False
        for i in range(t + 1, n):
            v = a[i][t]
            if v:
                q = v // piv
                if q:
                    for j in range(cols):
                        a[i][j] -= q * a[t][j]
                    for j in range(n):
                        left[i][j] -= q * left[t][j]
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            v = a[t][j]
            if v:
                q = v // piv
                if q:
                    for i in range(n):
                        a[i][j] -= q * a[i][t]
                    for i in range(cols):
                        right[i][j] -= q * right[i][t]
                if a[t][j]:
                    dirty = True
        if dirty:
            continue
        folded = False
        for i in range(t + 1, n):
            for j in range(t + 1, cols):
                if a[i][j] % piv:
                    for j2 in range(cols):
                        a[t][j2] += a[i][j2]
                    for j2 in range(n):
                        left[t][j2] += left[i][j2]
                    folded = True
                    break
            if folded:
                break
        if folded:
            continue
        t += 1
    for i in range(t):
        if a[i][i] < 0:
            a[i][i] = -a[i][i]
            for j in range(n):
                left[i][j] = -left[i][j]
    diag = [a[i][i] if i < t else 0 for i in range(size)]
    return diag, left, right


def gcd_with_vector(value: int, vec) -> int:
    """gcd of an integer and every entry of a vector; gcd(0, a) = |a|."""
    g = abs(value)
    for x in vec:
        g = gcd(g, x)
    return g


def kernel_min_generators_mod(m: list[list[int]], modulus: int) -> int:
    """Minimal number of generators of ker(M) as a module over Z/modulus.

    Computed from the Smith form: the kernel is the direct sum of cyclic
    modules Z/gcd(d_i, modulus), so the count is the number of invariant
    factors d_i (zeros included) with gcd(d_i, modulus) > 1.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    _require_square(m)
    diag = kernels.snf_diagonal(m)
    return sum(1 for d in diag if gcd(d, modulus) > 1)
