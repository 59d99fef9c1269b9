"""Simple undirected graphs on vertices 0..n-1, plus the stock constructions.

Adjacency is stored as one int bitmask per vertex, so neighborhood algebra
(intersection, union, membership) is single integer operations. Graphs are
immutable after construction and safe to share.

Vertex sets passed around the package are plain iterables of ints; functions
returning vertex sets return sorted tuples.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

VertexSet = tuple  # sorted tuple of vertex indices
Embedding = tuple  # Embedding[i] = host vertex carrying pattern vertex i


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor bitmask of v."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows for {n} vertices")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & (1 << v):
                raise ValueError(f"self-loop at vertex {v}")
            if row & ~full:
                raise ValueError(f"neighbor index out of range at vertex {v}")
            for u in bits(row):
                if not adj[u] & (1 << v):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def _raw(cls, n: int, adj: tuple) -> "Graph":
        """Skip validation; caller guarantees a well-formed adjacency tuple."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._raw(n, tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple]:
        for v in range(self.n):
            higher = self.adj[v] >> (v + 1)
            for u in bits(higher):
                yield (v, v + 1 + u)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple:
        return tuple(sorted(row.bit_count() for row in self.adj))

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph._raw(
            self.n,
            tuple((full ^ row) & ~(1 << v) for v, row in enumerate(self.adj)),
        )

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on the given vertices, relabeled by rank."""
        vs = sorted(set(vertices))
        for v in vs:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range for n={self.n}")
        pos = {v: i for i, v in enumerate(vs)}
        adj = [0] * len(vs)
        for i, v in enumerate(vs):
            row = self.adj[v]
            for u in vs[i + 1 :]:
                if row & (1 << u):
                    adj[i] |= 1 << pos[u]
                    adj[pos[u]] |= 1 << i
        return Graph._raw(len(vs), tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabel requires a permutation of 0..n-1")
        adj = [0] * self.n
        for v in range(self.n):
            for u in bits(self.adj[v]):
                adj[perm[v]] |= 1 << perm[u]
        return Graph._raw(self.n, tuple(adj))

    def component_masks(self) -> list:
        """Bitmasks of the connected components, by least vertex."""
        seen = 0
        out = []
        for v in range(self.n):
            if seen & (1 << v):
                continue
            comp = 1 << v
            frontier = 1 << v
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            out.append(comp)
            seen |= comp
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1


def empty(n: int) -> Graph:
    return Graph._raw(n, (0,) * n)


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError(f"complete: n must be nonnegative, got {n}")
    full = (1 << n) - 1
    return Graph._raw(n, tuple(full & ~(1 << v) for v in range(n)))


def path(n: int) -> Graph:
    if n < 0:
        raise ValueError(f"path: n must be nonnegative, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle: n must be at least 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError(f"complete_bipartite: sides must be nonnegative, got {a},{b}")
    left = (1 << a) - 1
    right = ((1 << (a + b)) - 1) ^ left
    return Graph._raw(a + b, tuple(right if v < a else left for v in range(a + b)))


def antihole(n: int) -> Graph:
    """Complement of the n-cycle, cyclically labeled."""
    return cycle(n).complement()


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of g (in lexicographic order); adjacency is
    sharing an endpoint."""
    es = list(g.edges())
    lg = [0] * len(es)
    for i, (a, b) in enumerate(es):
        for j in range(i + 1, len(es)):
            c, d = es[j]
            if a == c or a == d or b == c or b == d:
                lg[i] |= 1 << j
                lg[j] |= 1 << i
    return Graph._raw(len(es), tuple(lg))


def mycielskian(g: Graph) -> Graph:
    """Triangle-preserving construction that raises the chromatic number by
    one: each vertex v gets a shadow v' adjacent to N(v), and an apex is
    joined to all shadows."""
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    apex = 2 * n
    for v in range(n):
        edges.append((n + v, apex))
    return Graph.from_edges(2 * n + 1, edges)


def grotzsch() -> Graph:
    """The 11-vertex triangle-free graph with chromatic number 4."""
    return mycielskian(cycle(5))


def tree_T(k: int) -> Graph:
    """Double broom: a path with k edges plus two pendant edges at each
    end, k+5 vertices in all.

    The family T_1, T_2, ... is an antichain in the induced subgraph
    order: the only two vertices with two private leaves sit at distance
    exactly k, so no member fits inside another. (Hanging pendants at the
    interior vertices too would break this: any path edge together with
    its four leaves would reproduce T_1.)
    """
    if k < 1:
        raise ValueError(f"tree_T: k must be at least 1, got {k}")
    edges = [(i, i + 1) for i in range(k)]
    edges += [(0, k + 1), (0, k + 2), (k, k + 3), (k, k + 4)]
    return Graph.from_edges(k + 5, edges)


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    n = sum(p.n for p in parts)
    adj = []
    offset = 0
    for p in parts:
        adj.extend(row << offset for row in p.adj)
        offset += p.n
    return Graph._raw(n, tuple(adj))


def substitute(g: Graph, parts: Sequence[Graph]) -> Graph:
    """Replace vertex v of g by parts[v]; parts of adjacent base vertices
    are completely joined, parts of non-adjacent base vertices get no edges."""
    if len(parts) != g.n:
        raise ValueError(f"substitute: need {g.n} parts, got {len(parts)}")
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.n
    part_masks = [((1 << p.n) - 1) << offsets[v] for v, p in enumerate(parts)]
    adj = [0] * total
    for v, p in enumerate(parts):
        off = offsets[v]
        outside = 0
        for u in bits(g.adj[v]):
            outside |= part_masks[u]
        for w in range(p.n):
            adj[off + w] = (p.adj[w] << off) | outside
    return Graph._raw(total, tuple(adj))


def scott_seymour(k: int) -> Graph:
    """Iterated substitution of the 7-vertex antihole into every vertex,
    starting from a single vertex; level k has 7^k vertices."""
    if k < 0:
        raise ValueError(f"scott_seymour: k must be nonnegative, got {k}")
    g = complete(1)
    block = antihole(7)
    for _ in range(k):
        g = substitute(g, [block] * g.n)
    return g


def complement(g: Graph) -> Graph:
    return g.complement()


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    return g.induced(vertices)
