"""Induced-subgraph containment by backtracking."""

from __future__ import annotations

from typing import Optional

from .graphs import Embedding, Graph, bits


def is_induced_subgraph(h: Graph, g: Graph) -> Optional[Embedding]:
    """Embedding of h into g as an induced subgraph, or None.

    The embedding maps pattern vertex i to host vertex emb[i]; adjacency
    must match exactly in both directions (edges and non-edges). Returns
    the lexicographically first embedding under pattern vertex order, so
    repeated runs are deterministic.
    """
    if h.n > g.n or h.m > g.m:
        return None
    hdeg = [h.adj[v].bit_count() for v in range(h.n)]
    gdeg = [g.adj[v].bit_count() for v in range(g.n)]
    if h.n and max(hdeg) > max(gdeg, default=0):
        return None
    image = [0] * h.n
    used = 0

    def rec(i: int) -> bool:
        nonlocal used
        if i == h.n:
            return True
        want = h.adj[i]
        for w in range(g.n):
            b = 1 << w
            if used & b or gdeg[w] < hdeg[i]:
                continue
            ok = True
            for j in range(i):
                adj_h = bool(want & (1 << j))
                adj_g = bool(g.adj[w] & (1 << image[j]))
                if adj_h != adj_g:
                    ok = False
                    break
            if not ok:
                continue
            image[i] = w
            used |= b
            if rec(i + 1):
                return True
            used &= ~b
        return False

    if rec(0):
        return tuple(image)
    return None


def check_embedding(h: Graph, g: Graph, emb: Embedding) -> bool:
    """Verify the induced condition pairwise; used by tests and witnesses."""
    if len(emb) != h.n or len(set(emb)) != h.n:
        return False
    for u in range(h.n):
        for v in range(u + 1, h.n):
            if h.has_edge(u, v) != g.has_edge(emb[u], emb[v]):
                return False
    return True
