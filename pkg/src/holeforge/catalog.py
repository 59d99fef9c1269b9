"""Isomorphism-free graph catalogs.

The canonical form of a labeled graph is the lexicographically largest
adjacency word over all relabelings, where the word lists the upper
triangle of the adjacency matrix column by column (the graph6 bit order).
Two graphs are isomorphic iff their canonical words agree.

Enumeration uses canonical augmentation: the parent of a canonical graph
is the graph minus its last vertex, which is again canonical because the
word order is prefix-closed. Extending every canonical parent by one
vertex in all 2^(n-1) ways and keeping the canonical children therefore
visits every isomorphism class exactly once. A hereditary predicate
(closed under vertex deletion) may prune whole subtrees during the walk.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator, Optional

from . import config
from .errors import VertexCapExceeded
from .graphs import Graph


def _identity_columns(rows: tuple) -> list:
    """Column values of the identity labeling; entry j-1 is vertex j's
    adjacency to 0..j-1, earliest vertex in the most significant bit."""
    cols = []
    for v in range(1, len(rows)):
        c = 0
        row = rows[v]
        for u in range(v):
            c = (c << 1) | ((row >> u) & 1)
        cols.append(c)
    return cols


def _twins(rows: tuple, u: int, v: int) -> bool:
    """Swapping u and v is an automorphism; branches through them agree."""
    return (rows[u] ^ rows[v]) & ~((1 << u) | (1 << v)) == 0


def _is_canonical(rows: tuple) -> bool:
    """Is the identity labeling's word already the lexicographic maximum?"""
    n = len(rows)
    if n <= 1:
        return True
    cols = _identity_columns(rows)

    def rec(depth: int, used: int, colval: list) -> bool:
        if depth == n:
            return True
        target = cols[depth - 1] if depth >= 1 else 0
        chosen = []
        for v in range(n):
            if (used >> v) & 1:
                continue
            c = colval[v]
            if depth >= 1:
                if c > target:
                    return False
                if c < target:
                    continue
            chosen.append(v)
        tried = []
        for v in chosen:
            if any(_twins(rows, u, v) for u in tried):
                continue
            tried.append(v)
            row_v = rows[v]
            nxt = [(colval[w] << 1) | ((row_v >> w) & 1) for w in range(n)]
            if not rec(depth + 1, used | (1 << v), nxt):
                return False
        return True

    return rec(0, 0, [0] * n)


def _max_word(rows: tuple) -> list:
    """Lexicographically maximal adjacency word, by branch and bound over
    vertex orderings with twin pruning."""
    n = len(rows)
    if n <= 1:
        return []
    best: Optional[list] = None
    prefix: list = []

    def rec(depth: int, used: int, colval: list) -> None:
        nonlocal best
        if depth == n:
            if best is None or prefix > best:
                best = prefix[:]
            return
        groups: dict = {}
        for v in range(n):
            if not (used >> v) & 1:
                groups.setdefault(colval[v], []).append(v)
        for c in sorted(groups, reverse=True):
            if depth >= 1:
                if best is not None:
                    cmp = 0
                    for i in range(depth - 1):
                        if prefix[i] != best[i]:
                            cmp = 1 if prefix[i] > best[i] else -1
                            break
                    if cmp == 0 and c != best[depth - 1]:
                        cmp = 1 if c > best[depth - 1] else -1
                    if cmp < 0:
                        break  # smaller groups only get worse
                prefix.append(c)
            tried = []
            for v in groups[c]:
                if any(_twins(rows, u, v) for u in tried):
                    continue
                tried.append(v)
                row_v = rows[v]
                nxt = [(colval[w] << 1) | ((row_v >> w) & 1) for w in range(n)]
                rec(depth + 1, used | (1 << v), nxt)
            if depth >= 1:
                prefix.pop()

    rec(0, 0, [0] * n)
    assert best is not None
    return best


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant key: equal codes iff isomorphic graphs."""
    if g.n > 255:
        raise VertexCapExceeded(g.n, 255, "canonical_code")
    word = _max_word(g.adj)
    out = bytearray([g.n])
    acc = 0
    nbits = 0
    for j, col in enumerate(word, start=1):
        acc = (acc << j) | col
        nbits += j
        while nbits >= 8:
            out.append((acc >> (nbits - 8)) & 0xFF)
            nbits -= 8
    if nbits:
        out.append((acc << (8 - nbits)) & 0xFF)
    return bytes(out)


def canonical_form(g: Graph) -> Graph:
    """A canonically labeled copy of g (same code for isomorphic inputs)."""
    word = _max_word(g.adj)
    rows = [0] * g.n
    for v in range(1, g.n):
        col = word[v - 1]
        for u in range(v):
            if (col >> (v - 1 - u)) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph._raw(g.n, tuple(rows))


def _stream(n: int, hereditary_pred) -> Iterator[tuple]:
    """Canonical adjacency tuples on n vertices, optionally pruned by a
    hereditary predicate applied at every intermediate order."""
    if n == 0:
        if hereditary_pred is None or hereditary_pred(Graph._raw(0, ())):
            yield ()
        return
    for parent in _stream(n - 1, hereditary_pred):
        p = n - 1
        for mask in range(1 << p):
            rows = tuple(
                row | (((mask >> v) & 1) << p) for v, row in enumerate(parent)
            ) + (mask,)
            if not _is_canonical(rows):
                continue
            if hereditary_pred is not None and not hereditary_pred(
                Graph._raw(n, rows)
            ):
                continue
            yield rows


def enumerate_graphs(
    n: int,
    predicate: Optional[Callable[[Graph], bool]] = None,
    *,
    hereditary: bool = False,
    cap: Optional[int] = None,
) -> Iterator[Graph]:
    """One representative per isomorphism class on n vertices, in a fixed
    deterministic order.

    predicate filters the output; with hereditary=True it is also applied
    to every intermediate graph during augmentation (valid only when the
    predicate is closed under vertex deletion), which prunes the search.
    """
    if cap is None:
        cap = config.vertex_cap(config.ENUMERATION_CAP)
    if n > cap:
        raise VertexCapExceeded(n, cap, "enumerate_graphs")
    if n < 0:
        raise ValueError(f"enumerate_graphs: n must be nonnegative, got {n}")
    hered = predicate if hereditary else None
    for rows in _stream(n, hered):
        g = Graph._raw(n, rows)
        if predicate is None or hereditary or predicate(g):
            yield g


@lru_cache(maxsize=None)
def full_catalog(n: int) -> tuple:
    """Cached tuple of all isomorphism classes on n vertices (n <= 8)."""
    if n > 8:
        raise VertexCapExceeded(n, 8, "full_catalog")
    return tuple(enumerate_graphs(n))
