"""Constructive coloring of graphs with no induced cycle of length five or
more ("long-hole-free"), via distance levellings.

The palette recursion is N(1) = 1, N(w) = 4 N(w-1)^2, with closed form
N(w) = (1/4) 2^(2^w). A connected graph with clique number w is colored
with at most N(w) colors: levels of a breadth-first levelling are colored
independently, even levels and odd levels from two disjoint palettes of
2 N(w-1)^2 colors each. Each level decomposes, per component, through an
auxiliary coloring of the previous level into at most 2 N(w-1) parts of
clique number at most w-1, which recurse.

The clique-bound steps are theorems about long-hole-free graphs, not about
arbitrary graphs, so every one of them is re-verified at run time. On an
input that does have a long hole (possible under trust=True) a failed step
raises LongHoleDetected instead of producing a bad coloring; the final
coloring is always properness-checked before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import (
    DisconnectedGraph,
    InternalInvariantError,
    LongHoleDetected,
    SolverTimeout,
)
from .graphs import Graph, bits, mask_of
from .holes import has_long_hole
from .invariants import Coloring, chromatic_number, clique_number, is_proper

_PALETTE_OMEGA_CAP = 24


def palette_bound(omega: int) -> int:
    """N(omega) per the recursion N(1) = 1, N(w) = 4 N(w-1)^2."""
    if omega < 1:
        raise ValueError(f"palette_bound: omega must be at least 1, got {omega}")
    if omega > _PALETTE_OMEGA_CAP:
        raise ValueError(
            f"palette_bound: omega {omega} exceeds {_PALETTE_OMEGA_CAP}; "
            "the value would not be representable at desk scale"
        )
    value = 1
    for _ in range(omega - 1):
        value = 4 * value * value
    return value


@dataclass(frozen=True)
class PaletteBudget:
    omega: int
    bound: int


# closed form sanity: N(w) = (1/4) 2^(2^w) for small w
for _w in range(1, 6):
    assert palette_bound(_w) == (1 << (2**_w)) // 4
del _w


@dataclass(frozen=True)
class Levelling:
    """Breadth-first distance layers from a root, in one connected graph."""

    graph: Graph
    root: int
    levels: tuple  # tuple of sorted vertex tuples

    @property
    def level_masks(self) -> tuple:
        return tuple(mask_of(level) for level in self.levels)

    def check(self) -> None:
        g = self.graph
        masks = self.level_masks
        if not masks or masks[0] != 1 << self.root:
            raise InternalInvariantError("levelling must start at its root alone")
        union = 0
        for i, mask in enumerate(masks):
            if mask & union:
                raise InternalInvariantError("levelling levels overlap")
            union |= mask
            if i == 0:
                continue
            below = 0
            for j in range(i - 1):
                below |= masks[j]
            for v in bits(mask):
                if not g.adj[v] & masks[i - 1]:
                    raise InternalInvariantError(
                        f"vertex {v} in level {i} has no parent"
                    )
                if g.adj[v] & below:
                    raise InternalInvariantError(
                        f"vertex {v} in level {i} skips a level"
                    )
        if union != (1 << g.n) - 1:
            raise InternalInvariantError("levelling does not cover the graph")


def build_levelling(g: Graph, root: int) -> Levelling:
    """Distance layers from root; the graph must be connected."""
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range for n={g.n}")
    levels = []
    seen = 1 << root
    frontier = 1 << root
    while frontier:
        levels.append(tuple(bits(frontier)))
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    if seen != (1 << g.n) - 1:
        raise DisconnectedGraph(
            f"levelling from {root} reaches only {bin(seen).count('1')} of {g.n} vertices"
        )
    lev = Levelling(graph=g, root=root, levels=tuple(levels))
    lev.check()
    return lev


@dataclass(frozen=True)
class PrunedLevelling:
    """Levels 0..k-1 of a levelling after exclusive-child pruning against
    one component of level k."""

    base: Levelling
    k: int
    component: tuple  # sorted vertices of the chosen level-k component
    kept: tuple  # bitmasks for levels 0..k-1

    def check(self) -> None:
        g = self.base.graph
        cmask = mask_of(self.component)
        for i in range(self.k):
            child_pool = self.kept[i + 1] if i + 1 < self.k else cmask
            for v in bits(self.kept[i]):
                if not _has_exclusive_child(g, v, self.kept[i], child_pool):
                    raise InternalInvariantError(
                        f"kept vertex {v} in level {i} has no exclusive child"
                    )
        for i in range(1, self.k):
            for v in bits(self.kept[i]):
                if not g.adj[v] & self.kept[i - 1]:
                    raise InternalInvariantError(
                        f"kept vertex {v} in level {i} lost all parents"
                    )
        for z in self.component:
            if not g.adj[z] & self.kept[self.k - 1]:
                raise InternalInvariantError(
                    f"component vertex {z} lost all parents"
                )


def _has_exclusive_child(g: Graph, v: int, parent_pool: int, child_pool: int) -> bool:
    for w in bits(g.adj[v] & child_pool):
        if g.adj[w] & parent_pool == 1 << v:
            return True
    return False


def prune_for_component(lev: Levelling, k: int, c: Iterable[int]) -> PrunedLevelling:
    """Delete vertices of levels 0..k-1 that have no child for which they
    are the only remaining parent, one at a time in increasing vertex
    order, until no such vertex is left. Level k-1 children are counted
    inside the component c only."""
    g = lev.graph
    masks = lev.level_masks
    if k < 2 or k >= len(lev.levels):
        raise ValueError(f"prune_for_component: k={k} out of range")
    cmask = mask_of(c)
    if not cmask or cmask & ~masks[k]:
        raise ValueError("component is not inside level k")
    grown = _component_of(g, next(bits(cmask)), masks[k])
    if grown != cmask:
        raise ValueError("component is not a connected component of level k")

    kept = list(masks[:k])
    level_of = {}
    for i in range(k):
        for v in bits(masks[i]):
            level_of[v] = i

    changed = True
    while changed:
        changed = False
        for v in sorted(level_of):
            i = level_of[v]
            if not (kept[i] >> v) & 1:
                continue
            child_pool = kept[i + 1] if i + 1 < k else cmask
            if not _has_exclusive_child(g, v, kept[i], child_pool):
                kept[i] &= ~(1 << v)
                changed = True
                break

    pruned = PrunedLevelling(
        base=lev, k=k, component=tuple(sorted(c)), kept=tuple(kept)
    )
    pruned.check()
    return pruned


def _component_of(g: Graph, start: int, inside: int) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & inside & ~comp
        comp |= frontier
    return comp


class _StepFailed(Exception):
    """One of the long-hole-free structure theorems failed on this input."""

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


def _color_any(g: Graph, clique_cap: Optional[int], stats: Optional[dict]) -> list:
    """Raw recursive coloring; colors lie in [0, palette_bound(omega))."""
    colors = [0] * g.n
    for comp in g.component_masks():
        verts = sorted(bits(comp))
        sub = g.induced(verts)
        omega = clique_number(sub)[0]
        if clique_cap is not None and omega > clique_cap:
            raise _StepFailed(
                f"subgraph on {verts} has clique number {omega}, "
                f"expected at most {clique_cap}"
            )
        for v, c in zip(verts, _color_connected(sub, omega, stats)):
            colors[v] = c
    return colors


def _color_connected(g: Graph, omega: int, stats: Optional[dict]) -> list:
    if g.n == 0:
        return []
    if omega <= 1:
        return [0] * g.n
    n_pal = palette_bound(omega - 1)
    half = 2 * n_pal * n_pal
    lev = build_levelling(g, 0)
    masks = lev.level_masks
    colors = [0] * g.n
    level_used: list = [set() for _ in lev.levels]

    # level 0: one color from the even palette
    colors[0] = 0
    level_used[0].add(0)

    if len(lev.levels) >= 2:
        l1 = sorted(lev.levels[1])
        # inside the root's neighborhood, so clique number drops
        sub_colors = _color_any(g.induced(l1), omega - 1, stats)
        for v, c in zip(l1, sub_colors):
            colors[v] = half + c
            level_used[1].add(half + c)

    for k in range(2, len(lev.levels)):
        base = 0 if k % 2 == 0 else half
        todo = masks[k]
        while todo:
            cmask = _component_of(g, next(bits(todo)), masks[k])
            todo &= ~cmask
            _color_level_component(
                g, lev, k, cmask, omega, n_pal, base, colors, level_used[k], stats
            )

    if stats is not None:
        stats.setdefault("levels", []).append(
            {
                "omega": omega,
                "half": half,
                "per_level": [
                    {
                        "level": i,
                        "colors_used": len(used),
                        "lo": min(used) if used else None,
                        "hi": max(used) if used else None,
                    }
                    for i, used in enumerate(level_used)
                ],
            }
        )
    return colors


def _color_level_component(
    g: Graph,
    lev: Levelling,
    k: int,
    cmask: int,
    omega: int,
    n_pal: int,
    base: int,
    colors: list,
    used: set,
    stats: Optional[dict],
) -> None:
    pruned = prune_for_component(lev, k, tuple(bits(cmask)))
    kept = pruned.kept

    x = next(bits(kept[k - 2]), None)
    if x is None:
        raise InternalInvariantError("pruning emptied level k-2")
    y = None
    for w in bits(g.adj[x] & kept[k - 1]):
        if g.adj[w] & kept[k - 2] == 1 << x:
            y = w
            break
    if y is None:
        raise InternalInvariantError(f"vertex {x} kept without an exclusive child")

    a_mask = g.adj[y] & kept[k - 1]
    b_mask = kept[k - 1] & ~a_mask & ~(1 << y)
    stray = b_mask & ~g.adj[x]
    if stray:
        raise _StepFailed(
            f"vertices {sorted(bits(stray))} in level {k - 1} are not adjacent "
            f"to the chosen anchor {x}"
        )

    # auxiliary scratch coloring of the kept previous level
    aux = {}
    a_list = sorted(bits(a_mask))
    for v, c in zip(a_list, _color_any(g.induced(a_list), omega - 1, stats)):
        aux[v] = c
    by_list = sorted(bits(b_mask | (1 << y)))
    for v, c in zip(by_list, _color_any(g.induced(by_list), omega - 1, stats)):
        aux[v] = n_pal + c

    parts: dict = {}
    for z in bits(cmask):
        parents = g.adj[z] & kept[k - 1]
        if not parents:
            raise InternalInvariantError(f"component vertex {z} has no kept parent")
        parts.setdefault(min(aux[p] for p in bits(parents)), []).append(z)

    for i, members in sorted(parts.items()):
        sub_colors = _color_any(g.induced(members), omega - 1, stats)
        for v, c in zip(sorted(members), sub_colors):
            color = base + i * n_pal + c
            colors[v] = color
            used.add(color)


def color_long_hole_free(
    g: Graph, trust: bool = False, stats: Optional[dict] = None
) -> Coloring:
    """Proper coloring with at most palette_bound(omega) colors.

    With trust=False the input is first searched for a long hole, and one
    found there raises LongHoleDetected immediately. With trust=True the
    search is skipped; if the input was mislabeled, either the structure
    steps fail (raising LongHoleDetected with a witness found after the
    fact) or the coloring still comes out proper. An improper coloring is
    never returned: properness and the palette bound are re-checked on
    every call.
    """
    if not trust:
        witness = has_long_hole(g)
        if witness is not None:
            raise LongHoleDetected(witness)
    try:
        raw = _color_any(g, None, stats)
    except _StepFailed as exc:
        raise _diagnose(g, trust, exc.detail)

    dense = {c: i for i, c in enumerate(sorted(set(raw)))}
    coloring = Coloring(tuple(dense[c] for c in raw), max(len(dense), 1) if g.n else 0)

    if not is_proper(g, coloring):
        raise _diagnose(g, trust, "final coloring is not proper")
    omega = clique_number(g)[0] if g.n else 0
    if g.n and coloring.colors_used() > palette_bound(max(omega, 1)):
        raise _diagnose(g, trust, "palette bound exceeded")
    if stats is not None:
        stats["omega"] = omega
        stats["palette_bound"] = palette_bound(max(omega, 1)) if g.n else 0
        stats["colors_used"] = coloring.colors_used()
    return coloring


def _diagnose(g: Graph, trust: bool, detail: str) -> Exception:
    """A structure step failed: find the promised long hole if there is
    one, otherwise report a bug."""
    if trust:
        witness = has_long_hole(g)
        if witness is not None:
            return LongHoleDetected(
                witness, message=f"{detail}; long hole {witness} found afterwards"
            )
    return InternalInvariantError(
        f"{detail}, but the input has no long hole: this is a bug"
    )


@dataclass(frozen=True)
class ColoringReport:
    colors_used: int
    palette_bound: int
    omega: int
    chi_exact: Optional[int]


def coloring_report(
    g: Graph, trust: bool = False, exact_cap: int = 20
) -> ColoringReport:
    """Run the constructive coloring and compare against the budget, with
    the exact chromatic number attached when the graph is small enough."""
    coloring = color_long_hole_free(g, trust=trust)
    omega = clique_number(g)[0] if g.n else 0
    chi: Optional[int] = None
    if g.n <= exact_cap:
        try:
            chi = chromatic_number(g)[0]
        except SolverTimeout:
            chi = None
    return ColoringReport(
        colors_used=coloring.colors_used(),
        palette_bound=palette_bound(max(omega, 1)) if g.n else 0,
        omega=omega,
        chi_exact=chi,
    )
