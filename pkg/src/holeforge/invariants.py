"""Exact clique number, chromatic number, stability number, and clique
cover number, with witnesses.

All solvers are exact branch-and-bound on bitmask adjacency. Budgets are
wall-clock deadlines; running out raises SolverTimeout, which callers must
treat as "unknown", never as a bound.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Sequence

from . import config
from .errors import SolverTimeout, VertexCapExceeded
from .graphs import Graph, bits

# Vertex ceiling for the exact chromatic solver; beyond this the search
# tree is hopeless regardless of budget.
CHI_CAP = 64

_TICK_EVERY = 256


class _Deadline:
    __slots__ = ("at", "ticks", "what", "seconds")

    def __init__(self, seconds: Optional[float], what: str):
        self.seconds = seconds
        self.at = None if seconds is None else time.monotonic() + seconds
        self.ticks = 0
        self.what = what

    def tick(self):
        if self.at is None:
            return
        self.ticks += 1
        if self.ticks % _TICK_EVERY == 0 and time.monotonic() > self.at:
            raise SolverTimeout(self.what, self.seconds)


@dataclass(frozen=True)
class Coloring:
    """Proper vertex coloring: colors[v] is the color of v, all < palette."""

    colors: tuple
    palette: int

    def colors_used(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list:
        """Vertex tuples per nonempty color class, by color index."""
        buckets: dict = {}
        for v, c in enumerate(self.colors):
            buckets.setdefault(c, []).append(v)
        return [tuple(buckets[c]) for c in sorted(buckets)]


@dataclass(frozen=True)
class InvariantReport:
    n: int
    m: int
    omega: int
    chi: int
    alpha: int
    theta: int


def is_proper(g: Graph, coloring: Coloring) -> bool:
    if len(coloring.colors) != g.n:
        return False
    if any(not 0 <= c < coloring.palette for c in coloring.colors):
        return False
    for u, v in g.edges():
        if coloring.colors[u] == coloring.colors[v]:
            return False
    return True


def greedy_coloring(g: Graph, order: Optional[Sequence[int]] = None) -> Coloring:
    """Least available color along the given vertex order."""
    if order is None:
        order = range(g.n)
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("greedy_coloring: order must be a permutation of 0..n-1")
    colors = [-1] * g.n
    top = 0
    for v in order:
        used = 0
        for u in bits(g.adj[v]):
            if colors[u] >= 0:
                used |= 1 << colors[u]
        c = (~used & (used + 1)).bit_length() - 1  # lowest zero bit
        colors[v] = c
        top = max(top, c + 1)
    return Coloring(tuple(colors), max(top, 1) if g.n else 0)


def _color_sort(adj: Sequence[int], cand: int) -> tuple:
    """Greedy coloring of the candidate set; returns (vertices, bounds)
    where bounds[i] is the color count among the first i+1 vertices, an
    upper bound on the clique inside that prefix."""
    classes: list = []
    for v in bits(cand):
        for cls in classes:
            if not (cls[0] & adj[v]):
                cls[0] |= 1 << v
                cls[1].append(v)
                break
        else:
            classes.append([1 << v, [v]])
    order = []
    bounds = []
    for i, cls in enumerate(classes):
        for v in cls[1]:
            order.append(v)
            bounds.append(i + 1)
    return order, bounds


def _max_clique(adj: Sequence[int], universe: int, deadline: _Deadline) -> list:
    """Tomita-style search for a maximum clique inside the universe mask."""
    best: list = []
    current: list = []

    def expand(cand: int):
        nonlocal best
        deadline.tick()
        order, bounds = _color_sort(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if len(current) + bounds[i] <= len(best):
                return
            v = order[i]
            current.append(v)
            nxt = cand & adj[v]
            if nxt:
                expand(nxt)
            elif len(current) > len(best):
                best = current[:]
            current.pop()
            cand &= ~(1 << v)

    if universe:
        expand(universe)
    return best


def clique_number(g: Graph, timeout: Optional[float] = None) -> tuple:
    """Exact omega and a maximum clique as a sorted vertex tuple."""
    deadline = _Deadline(
        config.solver_timeout(timeout) if timeout is not None else None,
        "clique_number",
    )
    best = _max_clique(g.adj, (1 << g.n) - 1, deadline)
    return len(best), tuple(sorted(best))


def stability_number(g: Graph, timeout: Optional[float] = None) -> tuple:
    """Exact alpha with a maximum stable set witness."""
    size, witness = clique_number(g.complement(), timeout)
    return size, witness


def _k_color(
    adj: Sequence[int],
    verts: list,
    k: int,
    seed: Sequence[int],
    deadline: _Deadline,
) -> Optional[dict]:
    """Proper k-coloring of the vertices in verts, or None.

    DSATUR branching. Colors 0..len(seed)-1 are pinned to the seed clique;
    a later vertex may open a fresh color only in increasing order, which
    breaks color symmetry without losing completeness.
    """
    if len(seed) > k:
        return None
    color = {v: -1 for v in verts}
    neighbor_colors = {v: 0 for v in verts}
    degree = {v: bin(adj[v]).count("1") for v in verts}
    full = (1 << k) - 1

    for i, v in enumerate(seed):
        color[v] = i
        for u in bits(adj[v]):
            if u in neighbor_colors:
                neighbor_colors[u] |= 1 << i

    uncolored = [v for v in verts if color[v] < 0]
    max_used = [len(seed) - 1]

    def pick() -> Optional[int]:
        best_v = None
        best_key = None
        for v in uncolored:
            sat = bin(neighbor_colors[v]).count("1")
            key = (sat, degree[v], -v)
            if best_key is None or key > best_key:
                best_key = key
                best_v = v
        return best_v

    def rec() -> bool:
        deadline.tick()
        if not uncolored:
            return True
        v = pick()
        uncolored.remove(v)
        forbid = neighbor_colors[v]
        top = min(k - 1, max_used[0] + 1)
        allowed = ~forbid & ((1 << (top + 1)) - 1)
        c = allowed & -allowed
        while c:
            ci = c.bit_length() - 1
            color[v] = ci
            prev_max = max_used[0]
            if ci > prev_max:
                max_used[0] = ci
            touched = []
            for u in bits(adj[v]):
                if u in neighbor_colors and not neighbor_colors[u] & (1 << ci):
                    neighbor_colors[u] |= 1 << ci
                    touched.append(u)
            if rec():
                return True
            for u in touched:
                neighbor_colors[u] &= ~(1 << ci)
            max_used[0] = prev_max
            color[v] = -1
            allowed &= ~c
            c = allowed & -allowed
        uncolored.append(v)
        return False

    if rec():
        return {v: color[v] for v in verts}
    return None


def _component_chi(g: Graph, comp: int, deadline: _Deadline) -> dict:
    """Exact coloring of one component, as a vertex -> color dict."""
    verts = list(bits(comp))
    sub_n = len(verts)
    clique = _max_clique(g.adj, comp, deadline)
    omega = len(clique)
    alpha = len(_max_clique(g.complement().adj, comp, deadline))
    lb = max(omega, -(-sub_n // alpha) if alpha else 0)
    greedy = greedy_coloring(
        g, sorted(range(g.n), key=lambda v: (-(g.adj[v].bit_count()), v))
    )
    ub_colors = {v: greedy.colors[v] for v in verts}
    ub = len(set(ub_colors.values()))
    seed = sorted(clique)
    for k in range(lb, ub):
        got = _k_color(g.adj, verts, k, seed, deadline)
        if got is not None:
            return got
    # normalize the greedy fallback to a dense palette
    dense = {c: i for i, c in enumerate(sorted(set(ub_colors.values())))}
    return {v: dense[ub_colors[v]] for v in verts}


def is_k_colorable(
    g: Graph, k: int, timeout: Optional[float] = None
) -> Optional[Coloring]:
    """A proper coloring with at most k colors, or None if none exists."""
    if k < 0:
        raise ValueError(f"is_k_colorable: k must be nonnegative, got {k}")
    if g.n == 0:
        return Coloring((), 0)
    if k == 0:
        return None
    deadline = _Deadline(config.solver_timeout(timeout), "is_k_colorable")
    colors = [0] * g.n
    for comp in g.component_masks():
        verts = list(bits(comp))
        clique = _max_clique(g.adj, comp, deadline)
        if len(clique) > k:
            return None
        got = _k_color(g.adj, verts, k, sorted(clique), deadline)
        if got is None:
            return None
        for v, c in got.items():
            colors[v] = c
    return Coloring(tuple(colors), k)


def chromatic_number(
    g: Graph, timeout: Optional[float] = None, cap: Optional[int] = None
) -> tuple:
    """Exact chi and a proper witness coloring using exactly chi colors.

    Iterative deepening on k from the clique lower bound, independently
    per connected component. Raises SolverTimeout when the budget runs
    out and VertexCapExceeded above the vertex cap.
    """
    if cap is None:
        cap = config.vertex_cap(CHI_CAP)
    if g.n > cap:
        raise VertexCapExceeded(g.n, cap, "chromatic_number")
    if g.n == 0:
        return 0, Coloring((), 0)
    deadline = _Deadline(config.solver_timeout(timeout), "chromatic_number")
    colors = [0] * g.n
    chi = 0
    for comp in g.component_masks():
        assignment = _component_chi(g, comp, deadline)
        for v, c in assignment.items():
            colors[v] = c
        chi = max(chi, max(assignment.values()) + 1)
    return chi, Coloring(tuple(colors), chi)


def clique_cover_number(
    g: Graph, timeout: Optional[float] = None, cap: Optional[int] = None
) -> tuple:
    """Exact theta with a witness list of cliques covering the vertices."""
    chi, coloring = chromatic_number(g.complement(), timeout, cap)
    return chi, coloring.classes()


def analyze(
    g: Graph, timeout: Optional[float] = None, cap: Optional[int] = None
) -> InvariantReport:
    """All four invariants in one report."""
    omega, _ = clique_number(g, timeout)
    alpha, _ = stability_number(g, timeout)
    chi, _ = chromatic_number(g, timeout, cap)
    theta, _ = clique_cover_number(g, timeout, cap)
    return InvariantReport(n=g.n, m=g.m, omega=omega, chi=chi, alpha=alpha, theta=theta)
