"""Loopless undirected multigraphs on vertices 0..n-1.

The adjacency table stores exact integer edge multiplicities; graphs are
immutable (and hashable) after construction, so they can be shared freely
between threads and used as cache keys.  Randomness always enters through
an explicit stream argument.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction


class GraphParseError(ValueError):
    """Malformed edge-list document."""


class DisconnectedGraphError(ValueError):
    """Operation requires a connected graph."""


@dataclass(frozen=True)
class Multigraph:
    """Multigraph given by a symmetric multiplicity table with zero diagonal."""

    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.adj)
        for u, row in enumerate(self.adj):
            if len(row) != n:
                raise ValueError("adjacency table must be square")
            if row[u] != 0:
                raise ValueError(f"loop at vertex {u}")
            for v in range(u):
                if row[v] != self.adj[v][u]:
                    raise ValueError(f"asymmetric multiplicity at ({u}, {v})")
                if row[v] < 0:
                    raise ValueError(f"negative multiplicity at ({u}, {v})")

    @staticmethod
    def from_edges(n: int, edges) -> "Multigraph":
        """Build from (u, v) or (u, v, mult) items; repeated pairs sum."""
        if n < 1:
            raise ValueError("need at least one vertex")
        a = [[0] * n for _ in range(n)]
        for e in edges:
            if len(e) == 2:
                u, v = e
                mult = 1
            else:
                u, v, mult = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex index out of range in edge {e}")
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            if mult < 0:
                raise ValueError(f"negative multiplicity in edge {e}")
            a[u][v] += mult
            a[v][u] += mult
        return Multigraph(tuple(tuple(row) for row in a))

    @staticmethod
    def cycle(n: int) -> "Multigraph":
        return Multigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def path(n: int) -> "Multigraph":
        return Multigraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @staticmethod
    def complete(n: int) -> "Multigraph":
        return Multigraph.from_edges(n, itertools.combinations(range(n), 2))

    @property
    def n(self) -> int:
        return len(self.adj)

    def multiplicity(self, u: int, v: int) -> int:
        return self.adj[u][v]

    def valency(self, v: int) -> int:
        return sum(self.adj[v])

    def edge_pairs(self):
        """Yield (u, v, mult) with u < v and mult >= 1."""
        for u in range(self.n):
            row = self.adj[u]
            for v in range(u + 1, self.n):
                if row[v]:
                    yield u, v, row[v]

    def edge_count(self) -> int:
        """Total number of edges counted with multiplicity."""
        return sum(m for _, _, m in self.edge_pairs())

    def neighbors(self, v: int):
        row = self.adj[v]
        return [u for u in range(self.n) if row[u]]

    def is_simple(self) -> bool:
        return all(m == 1 for _, _, m in self.edge_pairs())

    def to_edge_list(self) -> str:
        """Render in the CLI's edge-list format."""
        lines = [f"n={self.n}"]
        for u, v, m in self.edge_pairs():
            lines.append(f"{u} {v}" if m == 1 else f"{u} {v} {m}")
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Multigraph:
    """Parse the edge-list format: a "n=<int>" header, then "u v" or
    "u v mult" lines (0-based); "#" starts a comment; repeated pairs sum."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            if not line.startswith("n="):
                raise GraphParseError(f"line {lineno}: expected 'n=<int>' header")
            try:
                n = int(line[2:])
            except ValueError:
                raise GraphParseError(f"line {lineno}: bad vertex count {line[2:]!r}") from None
            if n < 1:
                raise GraphParseError(f"line {lineno}: vertex count must be >= 1")
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise GraphParseError(f"line {lineno}: expected 'u v' or 'u v mult'")
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer field") from None
        u, v = nums[0], nums[1]
        mult = nums[2] if len(nums) == 3 else 1
        if u == v:
            raise GraphParseError(f"line {lineno}: loop edge {u} {v}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {lineno}: vertex index out of range 0..{n - 1}")
        if mult < 0:
            raise GraphParseError(f"line {lineno}: negative multiplicity")
        edges.append((u, v, mult))
    if n is None:
        raise GraphParseError("missing 'n=<int>' header")
    return Multigraph.from_edges(n, edges)


def laplacian(g: Multigraph) -> list[list[int]]:
    """Valency matrix minus adjacency: symmetric, all row sums zero."""
    n = g.n
    out = [[0] * n for _ in range(n)]
    for u in range(n):
        row = g.adj[u]
        s = 0
        for v in range(n):
            m = row[v]
            s += m
            out[u][v] = -m
        out[u][u] = s
    return out


def reduced_laplacian(g: Multigraph, base: int | None = None) -> list[list[int]]:
    """Laplacian with the base row and column removed (default: last
    vertex).  Requires a connected graph so the result is nonsingular."""
    if not is_connected(g):
        raise DisconnectedGraphError("reduced Laplacian needs a connected graph")
    n = g.n
    if base is None:
        base = n - 1
    if not (0 <= base < n):
        raise ValueError(f"base vertex {base} out of range")
    keep = [v for v in range(n) if v != base]
    out = []
    for u in keep:
        row = g.adj[u]
        s = sum(row)
        out.append([s if v == u else -row[v] for v in keep])
    return out


def modify_edges(g: Multigraph, x: int, y: int, k: int) -> Multigraph:
    """Remove k parallel (x, y) edges; negative k adds edges."""
    if x == y:
        raise ValueError("cannot modify edges at a single vertex")
    new_mult = g.adj[x][y] - k
    if new_mult < 0:
        raise ValueError(
            f"removing {k} edges from multiplicity {g.adj[x][y]} would go negative"
        )
    rows = [list(r) for r in g.adj]
    rows[x][y] = new_mult
    rows[y][x] = new_mult
    return Multigraph(tuple(tuple(r) for r in rows))


def contraction_map(n: int, x: int, y: int) -> list[int]:
    """Old-vertex -> new-vertex index map used by contract_edge: x and y
    merge into min(x, y); indices above max(x, y) shift down by one."""
    lo, hi = (x, y) if x < y else (y, x)
    out = []
    for v in range(n):
        if v == hi:
            out.append(lo)
        elif v > hi:
            out.append(v - 1)
        else:
            out.append(v)
    return out


def contract_edge(g: Multigraph, x: int, y: int) -> Multigraph:
    """Identify x and y (which must be adjacent); multiplicities to common
    neighbors sum, and the parallel (x, y) edges disappear as loops."""
    if g.adj[x][y] < 1:
        raise ValueError(f"no edge between {x} and {y}")
    n = g.n
    cmap = contraction_map(n, x, y)
    a = [[0] * (n - 1) for _ in range(n - 1)]
    for u, v, m in g.edge_pairs():
        cu, cv = cmap[u], cmap[v]
        if cu == cv:
            continue
        a[cu][cv] += m
        a[cv][cu] += m
    return Multigraph(tuple(tuple(row) for row in a))


def is_connected(g: Multigraph) -> bool:
    n = g.n
    if n == 1:
        return True
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        row = g.adj[u]
        for v in range(n):
            if row[v] and not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == n


def is_biconnected(g: Multigraph) -> bool:
    """Connected with no cut vertex.  Conventions: a single vertex is
    biconnected, and so is n=2 with at least one edge (the cut-vertex
    condition is vacuous there)."""
    n = g.n
    if n == 1:
        return True
    if not is_connected(g):
        return False
    if n == 2:
        return True
    return not _has_articulation_point(g)


def _has_articulation_point(g: Multigraph) -> bool:
    # iterative Tarjan lowpoint search on the underlying simple graph
    n = g.n
    disc = [0] * n
    low = [0] * n
    timer = 1
    parent = [-1] * n
    stack = [(0, iter(g.neighbors(0)))]
    disc[0] = low[0] = timer
    timer += 1
    root_children = 0
    while stack:
        u, it = stack[-1]
        advanced = False
        for v in it:
            if not disc[v]:
                parent[v] = u
                disc[v] = low[v] = timer
                timer += 1
                if u == 0:
                    root_children += 1
                stack.append((v, iter(g.neighbors(v))))
                advanced = True
                break
            elif v != parent[u]:
                if disc[v] < low[u]:
                    low[u] = disc[v]
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[u] < low[p]:
                    low[p] = low[u]
                if p != 0 and low[u] >= disc[p]:
                    return True
    return root_children > 1


def bridges(g: Multigraph) -> list[tuple[int, int]]:
    """Edges whose removal disconnects their component.  A pair with
    multiplicity >= 2 is never a bridge."""
    n = g.n
    disc = [0] * n
    low = [0] * n
    timer = 1
    out = []
    for start in range(n):
        if disc[start]:
            continue
        stack = [(start, -1, iter(g.neighbors(start)))]
        disc[start] = low[start] = timer
        timer += 1
        while stack:
            u, pu, it = stack[-1]
            advanced = False
            for v in it:
                if not disc[v]:
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, u, iter(g.neighbors(v))))
                    advanced = True
                    break
                elif v != pu:
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if low[u] > disc[p] and g.adj[p][u] == 1:
                        out.append((min(p, u), max(p, u)))
    return sorted(out)


def erdos_renyi(n: int, p: Fraction, rng) -> Multigraph:
    """Simple random graph: each of the n(n-1)/2 pairs is an edge
    independently with probability p.  The draw consumes one
    ``rng.randrange(p.denominator)`` per pair in (u, v) lexicographic
    order, so results are exactly reproducible from the stream state."""
    p = Fraction(p)
    if not (0 < p < 1):
        raise ValueError("edge probability must satisfy 0 < p < 1")
    if n < 2:
        raise ValueError("need at least two vertices")
    num, den = p.numerator, p.denominator
    a = [[0] * n for _ in range(n)]
    for u in range(n):
        au = a[u]
        for v in range(u + 1, n):
            if rng.randrange(den) < num:
                au[v] = 1
                a[v][u] = 1
    return Multigraph(tuple(tuple(row) for row in a))


def random_tree(n: int, rng) -> Multigraph:
    """Uniform labeled tree via a random Pruefer sequence."""
    if n == 1:
        return Multigraph.from_edges(1, [])
    if n == 2:
        return Multigraph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Multigraph.from_edges(n, edges)


def random_connected_multigraph(n: int, rng, max_mult: int = 3,
                                p: Fraction = Fraction(1, 2)) -> Multigraph:
    """Rejection-sample a connected multigraph: each pair present with
    probability p, multiplicity uniform in 1..max_mult."""
    num, den = p.numerator, p.denominator
    while True:
        a = [[0] * n for _ in range(n)]
        for u in range(n):
            for v in range(u + 1, n):
                if rng.randrange(den) < num:
                    m = 1 if max_mult == 1 else 1 + rng.randrange(max_mult)
                    a[u][v] = m
                    a[v][u] = m
        g = Multigraph(tuple(tuple(row) for row in a))
        if is_connected(g):
            return g


def random_biconnected_simple(n: int, rng, p: Fraction = Fraction(1, 2)) -> Multigraph:
    while True:
        g = erdos_renyi(n, p, rng)
        if is_biconnected(g):
            return g


def all_connected_graphs(n: int):
    """All labeled connected simple graphs on n vertices, enumerated by
    edge-subset bitmask in ascending order."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = _graph_from_mask(n, pairs, mask)
        if is_connected(g):
            yield g


def all_biconnected_graphs(n: int):
    """All labeled biconnected simple graphs on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = _graph_from_mask(n, pairs, mask)
        if is_biconnected(g):
            yield g


def _graph_from_mask(n, pairs, mask):
    a = [[0] * n for _ in range(n)]
    for idx, (u, v) in enumerate(pairs):
        if mask >> idx & 1:
            a[u][v] = 1
            a[v][u] = 1
    return Multigraph(tuple(tuple(row) for row in a))
