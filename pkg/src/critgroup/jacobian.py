"""Divisor algebra and the critical group of a connected multigraph.

Divisors are plain integer vectors (chips per vertex).  The critical
group is the quotient of degree-zero divisors by chip-firing moves; its
order equals the spanning-tree count, and the invariant factors of the
reduced Laplacian describe its cyclic decomposition.

Every operation takes the reduction base vertex explicitly (defaulting
to the last index), and all results are value-level independent of that
choice where the math says they must be.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from . import linalg
from .multigraph import Multigraph, is_connected, reduced_laplacian


@dataclass(frozen=True)
class JacobianStructure:
    """Order m and invariant factors (>1 only) of the critical group."""

    order: int
    invariant_factors: tuple[int, ...]
    base: int

    @property
    def rank(self) -> int:
        """Size of a minimal generating set."""
        return len(self.invariant_factors)

    @property
    def cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1

    def to_json_dict(self) -> dict:
        return {
            "m": str(self.order),
            "invariant_factors": [str(d) for d in self.invariant_factors],
            "rank": self.rank,
            "cyclic": self.cyclic,
        }


@dataclass(frozen=True)
class MonodromyWeight:
    """Integer vertex weighting representing the homomorphism that the
    divisor class induces on the critical group.

    ``reduced`` is normalized entrywise into [0, m); ``raw`` keeps the
    exact adjugate product (its signs matter to some edge-surgery
    identities, so both are exposed).
    """

    reduced: tuple[int, ...]
    raw: tuple[int, ...]
    modulus: int
    base: int


def zero_divisor(g: Multigraph) -> list[int]:
    return [0] * g.n


def delta(g: Multigraph, x: int, y: int) -> list[int]:
    """The degree-zero divisor with -1 at x and +1 at y."""
    if x == y:
        raise ValueError("delta needs two distinct vertices")
    d = [0] * g.n
    d[x] = -1
    d[y] = 1
    return d


def degree(divisor) -> int:
    return sum(divisor)


def add_divisors(d1, d2) -> list[int]:
    return [a + b for a, b in zip(d1, d2)]


def scale_divisor(d, k: int) -> list[int]:
    return [k * a for a in d]


def negate_divisor(d) -> list[int]:
    return [-a for a in d]


def reduce_divisor(divisor, base: int) -> list[int]:
    """Drop the base entry; a degree-zero divisor is determined by the
    rest (the missing entry is minus their sum)."""
    return [v for i, v in enumerate(divisor) if i != base]


def complete_divisor(reduced, base: int) -> list[int]:
    """Inverse of reduce_divisor under the degree-zero convention."""
    out = list(reduced)
    out.insert(base, -sum(reduced))
    return out


def reduce_script(script, base: int) -> list[int]:
    """Normalize so the base vertex fires zero times (the all-ones vector
    acts trivially), then drop the base entry."""
    shift = script[base]
    return [v - shift for i, v in enumerate(script) if i != base]


def fire(g: Multigraph, divisor, script) -> list[int]:
    """Apply a firing script: each vertex v sends script[v] chips along
    every incident edge.  Degree is preserved."""
    n = g.n
    if len(divisor) != n or len(script) != n:
        raise ValueError("divisor/script length must match vertex count")
    out = list(divisor)
    for v in range(n):
        row = g.adj[v]
        s = script[v]
        acc = divisor[v]
        for u in range(n):
            m = row[u]
            if m:
                acc += m * (script[u] - s)
        out[v] = acc
    return out


def _require_connected(g: Multigraph):
    if not is_connected(g):
        raise ValueError("operation requires a connected graph")


def _default_base(g: Multigraph, base: int | None) -> int:
    return g.n - 1 if base is None else base


@lru_cache(maxsize=512)
def _det_adj(g: Multigraph, base: int):
    lt = reduced_laplacian(g, base)
    det, adj = linalg.det_and_adjugate(lt)
    return det, tuple(tuple(row) for row in adj)


@lru_cache(maxsize=512)
def _snf_diag(g: Multigraph, base: int):
    lt = reduced_laplacian(g, base)
    return tuple(linalg.smith_normal_form(lt).diag)


def jacobian(g: Multigraph, base: int | None = None) -> JacobianStructure:
    """Order and invariant factors of the critical group (from the Smith
    form of the reduced Laplacian)."""
    _require_connected(g)
    if g.n < 2:
        raise ValueError("critical group needs at least two vertices")
    base = _default_base(g, base)
    diag = _snf_diag(g, base)
    order = 1
    for d in diag:
        order *= d
    return JacobianStructure(order, tuple(d for d in diag if d > 1), base)


def is_cyclic(g: Multigraph, base: int | None = None) -> bool:
    """True when at most one invariant factor exceeds 1."""
    return jacobian(g, base).cyclic


def jacobian_rank(g: Multigraph, base: int | None = None) -> int:
    """Minimal generating-set size of the critical group."""
    return jacobian(g, base).rank


def monodromy_weight(g: Multigraph, divisor, base: int | None = None) -> MonodromyWeight:
    """Weight vector of a degree-zero divisor: the adjugate of the
    reduced Laplacian applied to the reduced divisor, normalized
    entrywise into [0, m)."""
    _require_connected(g)
    if degree(divisor) != 0:
        raise ValueError("divisor must have degree zero")
    base = _default_base(g, base)
    det, adj = _det_adj(g, base)
    reduced = reduce_divisor(divisor, base)
    raw = [sum(r * x for r, x in zip(row, reduced)) for row in adj]
    return MonodromyWeight(
        reduced=tuple(v % det for v in raw),
        raw=tuple(raw),
        modulus=det,
        base=base,
    )


def divisors_equivalent(g: Multigraph, d1, d2, base: int | None = None) -> bool:
    """Whether the two degree-zero divisors differ by a firing script."""
    return equivalence_script(g, d1, d2, base) is not None


def equivalence_script(g: Multigraph, d1, d2, base: int | None = None):
    """A firing script taking d1 to d2 (base vertex fires 0 times), or
    None when the divisors are inequivalent."""
    _require_connected(g)
    if degree(d1) != degree(d2):
        raise ValueError("divisors must have equal degree")
    base = _default_base(g, base)
    lt = reduced_laplacian(g, base)
    rhs = [a - b for a, b in zip(reduce_divisor(d1, base), reduce_divisor(d2, base))]
    x = linalg.solve_integer(lt, rhs)
    if x is None:
        return None
    return complete_reduced_script(x, base)


def complete_reduced_script(reduced, base: int) -> list[int]:
    out = list(reduced)
    out.insert(base, 0)
    return out


def order_of_class(g: Multigraph, divisor, base: int | None = None) -> int:
    """Order of the divisor class in the critical group, via the closed
    form m / gcd(m, adjugate-weight vector)."""
    _require_connected(g)
    if degree(divisor) != 0:
        raise ValueError("divisor must have degree zero")
    base = _default_base(g, base)
    det, adj = _det_adj(g, base)
    reduced = reduce_divisor(divisor, base)
    g_acc = det
    for row in adj:
        g_acc = gcd(g_acc, sum(r * x for r, x in zip(row, reduced)))
    return det // g_acc


def class_index(g: Multigraph, divisor, base: int | None = None) -> int:
    """Index of the cyclic subgroup the class generates: m / order."""
    base = _default_base(g, base)
    det, _ = _det_adj(g, base)
    return det // order_of_class(g, divisor, base)


def _sorted_divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def order_by_search(g: Multigraph, divisor, base: int | None = None) -> int:
    """Order of the class found by direct search: the smallest k >= 1
    with k*D equivalent to the zero divisor.

    Independent oracle: checks each candidate by an integer linear solve
    (never the adjugate formula), trying only divisors of the group
    order since the order of any element divides it.
    """
    _require_connected(g)
    if degree(divisor) != 0:
        raise ValueError("divisor must have degree zero")
    base = _default_base(g, base)
    lt = reduced_laplacian(g, base)
    m = linalg.determinant(lt)
    reduced = reduce_divisor(divisor, base)
    for k in _sorted_divisors(m):
        if k == m:
            break
        if linalg.solve_integer(lt, [k * v for v in reduced]) is not None:
            return k
    return m


def monodromy_pairing(g: Multigraph, d1, d2, base: int | None = None) -> int:
    """Symmetric bilinear pairing of two degree-zero divisor classes,
    valued in Z/m: reduced(d1) . adjugate . reduced(d2) mod m."""
    _require_connected(g)
    if degree(d1) != 0 or degree(d2) != 0:
        raise ValueError("divisors must have degree zero")
    base = _default_base(g, base)
    det, adj = _det_adj(g, base)
    r1 = reduce_divisor(d1, base)
    r2 = reduce_divisor(d2, base)
    acc = 0
    for a, row in zip(r1, adj):
        if a:
            acc += a * sum(r * x for r, x in zip(row, r2))
    return acc % det
