"""Executable checkers for the edge-surgery and order-bound results.

Each checker evaluates an identity, divisibility law, or lower bound
exactly (integer or rational arithmetic throughout) and returns a report
carrying every intermediate value, so a failure is a complete witness.
Brute-force spanning-tree enumeration is provided as the independent
oracle the identities are checked against.

Convention: checkers that involve a distinguished pair (x, y) reduce the
Laplacian at x, which makes the adjugate's (y, y) entry the number of
spanning trees through a fixed (x, y) edge.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import jacobian as jac
from .multigraph import (
    DisconnectedGraphError,
    Multigraph,
    bridges,
    contract_edge,
    contraction_map,
    is_biconnected,
    is_connected,
    modify_edges,
)

BRUTE_FORCE_VERTEX_LIMIT = 10


def spanning_trees_brute(g: Multigraph) -> int:
    """Exact spanning-tree count by enumerating (n-1)-subsets of vertex
    pairs; parallel edges contribute multiplicatively.  Guarded to small
    graphs -- this is the oracle, not the fast path."""
    n = g.n
    if n > BRUTE_FORCE_VERTEX_LIMIT:
        raise ValueError(f"brute-force enumeration guarded to n <= {BRUTE_FORCE_VERTEX_LIMIT}")
    if n == 1:
        return 1
    pairs = list(g.edge_pairs())
    if len(pairs) < n - 1:
        return 0
    total = 0
    for subset in itertools.combinations(pairs, n - 1):
        parent = list(range(n))
        ok = True
        for u, v, _ in subset:
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            if u == v:
                ok = False
                break
            parent[u] = v
        if ok:
            prod = 1
            for _, _, m in subset:
                prod *= m
            total += prod
    return total


def trees_containing_edge_brute(g: Multigraph, x: int, y: int) -> int:
    """Spanning trees through one fixed (x, y) edge, by enumeration: the
    fixed edge counts once, every other chosen pair with multiplicity."""
    n = g.n
    if n > BRUTE_FORCE_VERTEX_LIMIT:
        raise ValueError(f"brute-force enumeration guarded to n <= {BRUTE_FORCE_VERTEX_LIMIT}")
    if g.adj[x][y] < 1:
        raise ValueError(f"no edge between {x} and {y}")
    if n == 2:
        return 1
    others = [(u, v, m) for u, v, m in g.edge_pairs() if {u, v} != {x, y}]
    total = 0
    for subset in itertools.combinations(others, n - 2):
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        ru, rv = find(x), find(y)
        parent[ru] = rv
        ok = True
        for u, v, _ in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            prod = 1
            for _, _, m in subset:
                prod *= m
            total += prod
    return total


def trees_containing_edge(g: Multigraph, x: int, y: int) -> int:
    """Adjugate route to the same count: reduce the Laplacian at x and
    read the (y, y) entry of its adjugate."""
    if g.adj[x][y] < 1:
        raise ValueError(f"no edge between {x} and {y}")
    _, adj = jac._det_adj(g, x)
    idx = y if y < x else y - 1
    return adj[idx][idx]


def _reduced_laplacian_unchecked(g: Multigraph, base: int) -> list[list[int]]:
    # no connectivity precondition: the determinant is then simply 0,
    # which is the correct spanning-tree count
    keep = [v for v in range(g.n) if v != base]
    out = []
    for u in keep:
        row = g.adj[u]
        s = sum(row)
        out.append([s if v == u else -row[v] for v in keep])
    return out


def _det_reduced_at(g: Multigraph, base: int) -> int:
    from . import linalg

    return linalg.determinant(_reduced_laplacian_unchecked(g, base))


@dataclass(frozen=True)
class DeletionIdentity:
    """det L~(G) = det L~(G1) + k * C_yy, reduced at x."""

    x: int
    y: int
    k: int
    det_full: int
    det_deleted: int
    c_yy: int

    @property
    def holds(self) -> bool:
        return self.det_full == self.det_deleted + self.k * self.c_yy

    def to_json_dict(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "k": self.k,
            "det_full": str(self.det_full),
            "det_deleted": str(self.det_deleted),
            "c_yy": str(self.c_yy),
            "holds": self.holds,
        }


def deletion_identity(g: Multigraph, x: int, y: int, k: int) -> DeletionIdentity:
    """Evaluate both sides of the edge-deletion determinant identity
    exactly.  Requires G and the modified graph to be connected."""
    if not is_connected(g):
        raise DisconnectedGraphError("graph must be connected")
    g1 = modify_edges(g, x, y, k)
    if not is_connected(g1):
        raise DisconnectedGraphError("modified graph is disconnected")
    det_full = _det_reduced_at(g, x)
    det_deleted = _det_reduced_at(g1, x)
    c_yy = trees_containing_edge_adjugate_entry(g, x, y)
    return DeletionIdentity(x, y, k, det_full, det_deleted, c_yy)


def trees_containing_edge_adjugate_entry(g: Multigraph, x: int, y: int) -> int:
    """(y, y) adjugate entry of the Laplacian reduced at x, defined even
    when (x, y) is not an edge (counts two-component spanning forests
    separating x from y)."""
    _, adj = jac._det_adj(g, x)
    idx = y if y < x else y - 1
    return adj[idx][idx]


@dataclass(frozen=True)
class DivisibilityReport:
    """Divisibility laws tying the subgroup index of the two-vertex class
    to the orders of the groups before and after edge surgery.

    law1 (index divides gcd) is unconditional; law2 (gcd divides index
    squared) and the iff characterization of generators are guaranteed
    only when gcd(m, k_xy) = 1 -- always the case for k = +-1.
    """

    x: int
    y: int
    k_xy: int
    m: int
    m1: int
    c_yy: int
    index: int
    index1: int
    gcd_val: int

    @property
    def law1_holds(self) -> bool:
        return self.gcd_val % self.index == 0

    @property
    def law1_companion_holds(self) -> bool:
        return self.gcd_val % self.index1 == 0

    @property
    def guard_coprime(self) -> bool:
        """gcd(m, k_xy) = 1: the hypothesis of law2 and of the iff."""
        return gcd(self.m, self.k_xy) == 1

    @property
    def law2_holds(self) -> bool:
        return self.index * self.index % self.gcd_val == 0

    @property
    def iff_holds(self) -> bool:
        return (self.index == 1) == (self.gcd_val == 1)

    @property
    def equality_applicable(self) -> bool:
        return self.k_xy in (1, -1)

    @property
    def equality_holds(self) -> bool:
        """For k = +-1 the divisibilities sharpen to equality:
        gcd(m, C_yy) = gcd(m, m1)."""
        return gcd(self.m, self.c_yy) == self.gcd_val

    @property
    def asserted_laws_hold(self) -> bool:
        if not (self.law1_holds and self.law1_companion_holds):
            return False
        if self.guard_coprime and not (self.law2_holds and self.iff_holds):
            return False
        if self.equality_applicable and not self.equality_holds:
            return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "k_xy": self.k_xy,
            "m": str(self.m),
            "m1": str(self.m1),
            "c_yy": str(self.c_yy),
            "index": str(self.index),
            "index1": str(self.index1),
            "gcd": str(self.gcd_val),
            "law1_holds": self.law1_holds,
            "law1_companion_holds": self.law1_companion_holds,
            "guard_coprime": self.guard_coprime,
            "law2_holds": self.law2_holds,
            "iff_holds": self.iff_holds,
            "equality_applicable": self.equality_applicable,
            "equality_holds": self.equality_holds,
            "all_asserted_hold": self.asserted_laws_hold,
        }


def divisibility_report(g: Multigraph, x: int, y: int, k: int) -> DivisibilityReport:
    """Evaluate every divisibility law for the surgery removing k (x, y)
    edges (negative k adds).  Both graphs must be connected."""
    if x == y:
        raise ValueError("need two distinct vertices")
    if not is_connected(g):
        raise DisconnectedGraphError("graph must be connected")
    g1 = modify_edges(g, x, y, k)
    if not is_connected(g1):
        raise DisconnectedGraphError("modified graph is disconnected")
    m = _det_reduced_at(g, x)
    m1 = _det_reduced_at(g1, x)
    c_yy = trees_containing_edge_adjugate_entry(g, x, y)
    d = jac.delta(g, x, y)
    index = m // jac.order_of_class(g, d, base=x)
    index1 = m1 // jac.order_of_class(g1, d, base=x)
    return DivisibilityReport(
        x=x, y=y, k_xy=k, m=m, m1=m1, c_yy=c_yy,
        index=index, index1=index1, gcd_val=gcd(m, m1),
    )


def is_generator_delta(g: Multigraph, x: int, y: int) -> bool:
    """Whether the difference-of-two-vertices class generates the whole
    critical group.  x and y need not be adjacent."""
    if not is_connected(g):
        raise DisconnectedGraphError("graph must be connected")
    m = jac._det_adj(g, g.n - 1)[0]
    return jac.order_of_class(g, jac.delta(g, x, y)) == m


def generator_gcd_criterion(g: Multigraph, x: int, y: int, add: bool = True) -> bool:
    """The surgery characterization of generators: gcd(|group|,
    |group after adding (add=True) or removing one (x, y) edge|) = 1.
    Removing requires the edge to exist and the result to stay connected.
    """
    g1 = modify_edges(g, x, y, -1 if add else 1)
    if not is_connected(g1):
        raise DisconnectedGraphError("modified graph is disconnected")
    m = _det_reduced_at(g, x)
    m1 = _det_reduced_at(g1, x)
    return gcd(m, m1) == 1


@dataclass(frozen=True)
class ContractionReport:
    """Deletion-contraction recurrence T(G) = T(G-e) + T(G/e), checked by
    determinants and by brute enumeration, plus T(G/e) = C_yy."""

    x: int
    y: int
    trees_total: int
    trees_without_edge: int
    trees_contracted: int
    c_yy: int
    brute_total: int
    brute_without_edge: int
    brute_contracted: int

    @property
    def determinant_recurrence_holds(self) -> bool:
        return self.trees_total == self.trees_without_edge + self.trees_contracted

    @property
    def brute_recurrence_holds(self) -> bool:
        return self.brute_total == self.brute_without_edge + self.brute_contracted

    @property
    def routes_agree(self) -> bool:
        return (
            self.trees_total == self.brute_total
            and self.trees_without_edge == self.brute_without_edge
            and self.trees_contracted == self.brute_contracted
        )

    @property
    def contracted_matches_adjugate(self) -> bool:
        return self.trees_contracted == self.c_yy

    @property
    def holds(self) -> bool:
        return (
            self.determinant_recurrence_holds
            and self.brute_recurrence_holds
            and self.routes_agree
            and self.contracted_matches_adjugate
        )

    def to_json_dict(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "trees_total": str(self.trees_total),
            "trees_without_edge": str(self.trees_without_edge),
            "trees_contracted": str(self.trees_contracted),
            "c_yy": str(self.c_yy),
            "holds": self.holds,
        }


def contraction_recurrence_check(g: Multigraph, x: int, y: int) -> ContractionReport:
    """Verify the spanning-tree recurrence for contracting one (x, y)
    edge.  Guarded to small graphs because of the enumeration oracle."""
    if g.adj[x][y] < 1:
        raise ValueError(f"no edge between {x} and {y}")
    if g.n > BRUTE_FORCE_VERTEX_LIMIT:
        raise ValueError(f"guarded to n <= {BRUTE_FORCE_VERTEX_LIMIT}")
    g_minus = modify_edges(g, x, y, 1)
    g_over = contract_edge(g, x, y)
    det_total = _det_reduced_at(g, x)
    det_minus = _det_reduced_at(g_minus, x)
    det_over = _det_reduced_at(g_over, 0) if g_over.n > 1 else 1
    c_yy = trees_containing_edge_adjugate_entry(g, x, y)
    return ContractionReport(
        x=x, y=y,
        trees_total=det_total,
        trees_without_edge=det_minus,
        trees_contracted=det_over,
        c_yy=c_yy,
        brute_total=spanning_trees_brute(g),
        brute_without_edge=spanning_trees_brute(g_minus),
        brute_contracted=spanning_trees_brute(g_over),
    )


@dataclass(frozen=True)
class ContractionGeneratorReport:
    """When |Jac(G)| and |Jac(G/e)| are coprime, the contracted group is
    cyclic and an explicit divisor supported on the merged vertex and the
    old neighbors of x generates it."""

    x: int
    y: int
    m: int
    m_contracted: int
    coprime: bool
    generator: tuple[int, ...]
    generates: bool
    mirror_equivalent: bool  # the x/y-swapped generator is the negation

    def to_json_dict(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "m": str(self.m),
            "m_contracted": str(self.m_contracted),
            "coprime": self.coprime,
            "generator": list(self.generator),
            "generates": self.generates,
            "mirror_equivalent": self.mirror_equivalent,
        }


def _contraction_generator_divisor(g: Multigraph, x: int, y: int) -> list[int]:
    # merged vertex gets val(x) minus the contracted multiplicity; every
    # other neighbor v of x gets -mult(x, v); multigraph-safe version of
    # the simple-graph (val(x)-1 / -1) form, always degree zero
    cmap = contraction_map(g.n, x, y)
    out = [0] * (g.n - 1)
    z = cmap[x]
    out[z] = g.valency(x) - g.adj[x][y]
    for v in range(g.n):
        if v in (x, y):
            continue
        if g.adj[x][v]:
            out[cmap[v]] = -g.adj[x][v]
    return out


def contraction_generator(g: Multigraph, x: int, y: int) -> ContractionGeneratorReport:
    """Build the explicit generator for the contracted graph's group and
    verify it generates (under the coprimality hypothesis; when the
    hypothesis fails the report simply records it)."""
    if g.adj[x][y] < 1:
        raise ValueError(f"no edge between {x} and {y}")
    if not is_connected(g):
        raise DisconnectedGraphError("graph must be connected")
    g_over = contract_edge(g, x, y)
    m = _det_reduced_at(g, x)
    if g_over.n == 1:
        return ContractionGeneratorReport(
            x=x, y=y, m=m, m_contracted=1, coprime=gcd(m, 1) == 1,
            generator=(0,), generates=True, mirror_equivalent=True,
        )
    m_c = _det_reduced_at(g_over, 0)
    d_x = _contraction_generator_divisor(g, x, y)
    d_y = _contraction_generator_divisor(g, y, x)
    generates = jac.order_of_class(g_over, d_x) == m_c
    mirror = jac.divisors_equivalent(g_over, d_x, jac.negate_divisor(d_y))
    return ContractionGeneratorReport(
        x=x, y=y, m=m, m_contracted=m_c, coprime=gcd(m, m_c) == 1,
        generator=tuple(d_x), generates=generates, mirror_equivalent=mirror,
    )


@dataclass(frozen=True)
class BoundCheck:
    name: str
    applicable: bool
    holds: bool | None
    reason: str | None
    details: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "holds": self.holds,
            "reason": self.reason,
            "details": self.details,
        }


@dataclass(frozen=True)
class BoundReport:
    checks: tuple[BoundCheck, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks if c.applicable)

    def to_json_dict(self) -> dict:
        return {"checks": [c.to_json_dict() for c in self.checks], "all_hold": self.all_hold}


def _edge_orders(g: Multigraph) -> dict[tuple[int, int], int]:
    return {(u, v): jac.order_of_class(g, jac.delta(g, u, v)) for u, v, _ in g.edge_pairs()}


def bound_report(g: Multigraph) -> BoundReport:
    """Evaluate every order lower bound that applies to the graph, with
    exact rational comparisons.  Inapplicable bounds are skipped with a
    reason rather than forced."""
    if not is_connected(g):
        raise DisconnectedGraphError("graph must be connected")
    n = g.n
    eps = g.edge_count()
    orders = _edge_orders(g)
    checks = []

    # existence bound: some edge has order >= edges/(n-1); tight on trees
    if eps == 0:
        checks.append(BoundCheck("max_order_vs_edges_over_n_minus_1", False, None,
                                 "graph has no edges"))
    else:
        best_edge = max(orders, key=orders.get)
        best = orders[best_edge]
        bound = Fraction(eps, n - 1)
        checks.append(BoundCheck(
            "max_order_vs_edges_over_n_minus_1", True, best >= bound, None,
            {"witness_edge": list(best_edge), "order": str(best), "bound": str(bound)},
        ))

    # existence bound: some edge has order >= edges/(edges-n+1); tight on
    # cycles; needs a bridgeless graph (a bridge lies in every spanning
    # tree, which breaks the pigeonhole step), and bridgeless implies the
    # denominator is positive
    if eps == 0 or eps - n + 1 < 1:
        checks.append(BoundCheck("max_order_vs_edges_over_excess", False, None,
                                 "no cycle: denominator would be nonpositive"))
    elif bridges(g):
        checks.append(BoundCheck("max_order_vs_edges_over_excess", False, None,
                                 "graph has a bridge"))
    else:
        best_edge = max(orders, key=orders.get)
        best = orders[best_edge]
        bound = Fraction(eps, eps - n + 1)
        checks.append(BoundCheck(
            "max_order_vs_edges_over_excess", True, best >= bound, None,
            {"witness_edge": list(best_edge), "order": str(best), "bound": str(bound)},
        ))

    # per-edge valency bound for biconnected simple graphs, both
    # orientations; equality on complete graphs
    if not is_biconnected(g):
        checks.append(BoundCheck("valency_bound_simple", False, None, "graph is not biconnected"))
    elif not g.is_simple():
        checks.append(BoundCheck("valency_bound_simple", False, None, "graph is not simple"))
    elif n < 3:
        checks.append(BoundCheck("valency_bound_simple", False, None,
                                 "needs valencies >= 2 (n >= 3)"))
    else:
        holds = True
        worst = None
        for (u, v), order in orders.items():
            for x, y in ((u, v), (v, u)):
                vx, vy = g.valency(x), g.valency(y)
                bound = vx + Fraction(vx - 1, vy - 1)
                if order < bound:
                    holds = False
                    worst = {"edge": [x, y], "order": str(order), "bound": str(bound)}
                    break
            if not holds:
                break
        checks.append(BoundCheck("valency_bound_simple", True, holds,
                                 None, worst or {"edges_checked": len(orders)}))

    # per-edge valency bound for biconnected multigraphs, the higher
    # valency endpoint playing x
    if not is_biconnected(g):
        checks.append(BoundCheck("valency_bound_multigraph", False, None,
                                 "graph is not biconnected"))
    elif any(g.valency(v) < 2 for v in range(n)):
        checks.append(BoundCheck("valency_bound_multigraph", False, None,
                                 "a valency-1 endpoint makes the bound undefined"))
    else:
        holds = True
        worst = None
        for (u, v), order in orders.items():
            x, y = (u, v) if g.valency(u) >= g.valency(v) else (v, u)
            vx, vy = g.valency(x), g.valency(y)
            bound = (vx - 1) * Fraction(vy, vy - 1)
            if order < bound:
                holds = False
                worst = {"edge": [x, y], "order": str(order), "bound": str(bound)}
                break
        checks.append(BoundCheck("valency_bound_multigraph", True, holds,
                                 None, worst or {"edges_checked": len(orders)}))

    return BoundReport(tuple(checks))
