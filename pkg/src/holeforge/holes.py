"""Induced-cycle enumeration and hereditary-class tests.

A hole is an induced cycle of length at least 4; a long hole has length at
least 5. Cycles are reported in canonical orientation: starting at their
least vertex, second vertex smaller than last.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from . import config
from .errors import NoBisimplicialVertex, VertexCapExceeded
from .graphs import Graph, bits
from .invariants import Coloring, clique_number, greedy_coloring

PERFECT_CAP = 64


@dataclass(frozen=True)
class HoleReport:
    cycles: tuple  # vertex tuples in canonical cyclic order
    truncated: bool

    def lengths(self) -> dict:
        out: dict = {}
        for c in self.cycles:
            out[len(c)] = out.get(len(c), 0) + 1
        return out


@dataclass(frozen=True)
class ClassFlags:
    chordal: bool
    chordal_bipartite: bool
    long_hole_free: bool
    weakly_chordal: bool
    same_parity: bool
    parity: str  # acyclic | all_even | all_odd | mixed
    even_hole_free: bool
    odd_hole_free: bool
    perfect: bool
    witnesses: dict = field(default_factory=dict)


def _induced_cycles(g: Graph, min_len: int, max_len: int) -> Iterator[tuple]:
    """DFS over induced paths; yields each induced cycle exactly once."""
    n = g.n
    adj = g.adj
    for s in range(n):
        low = (1 << (s + 1)) - 1
        # path[0] = s throughout; blocked = interior neighborhoods + path + low
        path = [s]

        def rec(blocked: int, path_mask: int):
            pk = path[-1]
            cand = adj[pk] & ~blocked & ~path_mask
            if pk == s:
                extending = cand  # first step walks onto a neighbor of s
            else:
                extending = cand & ~adj[s]
                if len(path) >= 2 and min_len <= len(path) + 1 <= max_len:
                    for w in bits(cand & adj[s]):
                        if path[1] < w:
                            yield tuple(path) + (w,)
            if len(path) + 2 > max_len:
                return
            # the old endpoint becomes interior (unless it is s itself)
            nxt_blocked = blocked if pk == s else blocked | adj[pk]
            for w in bits(extending):
                path.append(w)
                yield from rec(nxt_blocked, path_mask | (1 << w))
                path.pop()

        if max_len >= 3:
            yield from rec(low, 1 << s)


def enumerate_induced_cycles(
    g: Graph,
    min_len: int = 3,
    max_len: Optional[int] = None,
    cap: Optional[int] = None,
) -> HoleReport:
    """All induced cycles with length in [min_len, max_len], stopping with
    a truncation flag if more than cap cycles show up."""
    if max_len is None:
        max_len = g.n
    if not 3 <= min_len <= max(max_len, 3):
        raise ValueError(f"bad length range [{min_len}, {max_len}]")
    if cap is None:
        cap = config.CYCLE_CAP
    out = []
    truncated = False
    for cyc in _induced_cycles(g, min_len, max_len):
        if len(out) >= cap:
            truncated = True
            break
        out.append(cyc)
    return HoleReport(tuple(out), truncated)


def has_long_hole(g: Graph) -> Optional[tuple]:
    """First induced cycle of length >= 5, or None."""
    for cyc in _induced_cycles(g, 5, g.n):
        return cyc
    return None


def _first_cycle(g: Graph, min_len: int, parity: Optional[int] = None) -> Optional[tuple]:
    for cyc in _induced_cycles(g, min_len, g.n):
        if parity is None or len(cyc) % 2 == parity:
            return cyc
    return None


def _is_simplicial(adj: tuple, v: int, alive: int) -> bool:
    nb = adj[v] & alive
    for u in bits(nb):
        if nb & ~adj[u] & ~(1 << u):
            return False
    return True


def is_chordal(g: Graph) -> tuple:
    """(True, simplicial elimination order) or (False, witness hole).

    Maximum cardinality search builds the candidate order; its reverse is
    a perfect elimination order exactly when the graph is chordal.
    """
    n = g.n
    adj = g.adj
    weight = [0] * n
    picked = 0
    mcs = []
    for _ in range(n):
        v = max(
            (v for v in range(n) if not (picked >> v) & 1),
            key=lambda v: (weight[v], -v),
        )
        mcs.append(v)
        picked |= 1 << v
        for u in bits(adj[v]):
            weight[u] += 1
    order = mcs[::-1]
    eliminated = 0
    for v in order:
        later = adj[v] & ~eliminated & ~(1 << v)
        if not _is_simplicial(adj, v, later | (1 << v)):
            witness = _first_cycle(g, 4)
            assert witness is not None
            return False, witness
        eliminated |= 1 << v
    return True, tuple(order)


def is_bipartite(g: Graph) -> tuple:
    """(True, side mask) or (False, odd closed walk evidence as None)."""
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] >= 0:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return False, None
    mask = 0
    for v in range(g.n):
        if side[v] == 0:
            mask |= 1 << v
    return True, mask


def is_chordal_bipartite(g: Graph) -> bool:
    """Bipartite with every induced cycle a 4-cycle."""
    ok, _ = is_bipartite(g)
    return ok and has_long_hole(g) is None


def is_weakly_chordal(g: Graph) -> bool:
    """No hole of length >= 5 in the graph or in its complement."""
    return has_long_hole(g) is None and has_long_hole(g.complement()) is None


def parity_class(g: Graph) -> str:
    """acyclic, all_even, all_odd, or mixed, over the induced cycles."""
    seen_even = False
    seen_odd = False
    for cyc in _induced_cycles(g, 3, g.n):
        if len(cyc) % 2 == 0:
            seen_even = True
        else:
            seen_odd = True
        if seen_even and seen_odd:
            return "mixed"
    if seen_even:
        return "all_even"
    if seen_odd:
        return "all_odd"
    return "acyclic"


def find_bisimplicial(g: Graph, alive: Optional[int] = None) -> Optional[int]:
    """First vertex whose neighborhood is a union of two cliques,
    equivalently whose neighborhood induces a bipartite complement."""
    if alive is None:
        alive = (1 << g.n) - 1
    for v in bits(alive):
        nb = g.adj[v] & alive
        if _complement_bipartite(g.adj, nb):
            return v
    return None


def _complement_bipartite(adj: tuple, nb: int) -> bool:
    side = {}
    for start in bits(nb):
        if start in side:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in bits(nb & ~adj[v] & ~(1 << v)):
                if u not in side:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def bisimplicial_elimination_coloring(g: Graph) -> Coloring:
    """Repeatedly strip a bisimplicial vertex, then greedily color in
    reverse removal order.

    On even-hole-free inputs this succeeds and uses at most 2*omega - 1
    colors (each stripped vertex sees at most two cliques of its own
    clique bound). Simplicial vertices are stripped preferentially, so
    chordal inputs come out with exactly omega colors. Raises
    NoBisimplicialVertex with the stuck subgraph when no removable vertex
    exists.
    """
    alive = (1 << g.n) - 1
    removal = []
    while alive:
        v = None
        for u in bits(alive):
            if _is_simplicial(g.adj, u, alive):
                v = u
                break
        if v is None:
            v = find_bisimplicial(g, alive)
        if v is None:
            raise NoBisimplicialVertex(tuple(bits(alive)))
        removal.append(v)
        alive &= ~(1 << v)
    return greedy_coloring(g, removal[::-1])


def _odd_hole(g: Graph) -> Optional[tuple]:
    return _first_cycle(g, 5, parity=1)


def is_perfect(g: Graph, cap: Optional[int] = None) -> tuple:
    """(True, None) or (False, witness), witness tagged as an odd hole or
    an odd antihole (vertex tuple in the complement's cycle order)."""
    if cap is None:
        cap = config.vertex_cap(PERFECT_CAP)
    if g.n > cap:
        raise VertexCapExceeded(g.n, cap, "is_perfect")
    hole = _odd_hole(g)
    if hole is not None:
        return False, ("odd_hole", hole)
    antihole = _odd_hole(g.complement())
    if antihole is not None:
        return False, ("odd_antihole", antihole)
    return True, None


def classify(g: Graph) -> ClassFlags:
    """Membership flags for every hereditary class tracked here."""
    witnesses: dict = {}
    chordal_ok, chordal_payload = is_chordal(g)
    if not chordal_ok:
        witnesses["chordal"] = chordal_payload
    long_hole = has_long_hole(g)
    if long_hole is not None:
        witnesses["long_hole_free"] = long_hole
    co_long_hole = has_long_hole(g.complement())
    if long_hole is not None or co_long_hole is not None:
        witnesses["weakly_chordal"] = (
            long_hole if long_hole is not None else co_long_hole
        )
    bip, _ = is_bipartite(g)
    parity = parity_class(g)
    even_hole = _first_cycle(g, 4, parity=0)
    if even_hole is not None:
        witnesses["even_hole_free"] = even_hole
    odd_hole = _odd_hole(g)
    if odd_hole is not None:
        witnesses["odd_hole_free"] = odd_hole
    perfect, perfect_witness = is_perfect(g)
    if not perfect:
        witnesses["perfect"] = perfect_witness
    return ClassFlags(
        chordal=chordal_ok,
        chordal_bipartite=bip and long_hole is None,
        long_hole_free=long_hole is None,
        weakly_chordal=long_hole is None and co_long_hole is None,
        same_parity=parity != "mixed",
        parity=parity,
        even_hole_free=even_hole is None,
        odd_hole_free=odd_hole is None,
        perfect=perfect,
        witnesses=witnesses,
    )
