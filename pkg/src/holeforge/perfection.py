"""Perfect chromatic number and nice-graph certification.

The perfect chromatic number chi_p is the least number of classes in a
vertex partition where every class induces a perfect graph. It always
sits in the sandwich ceil(chi/omega) <= chi_p <= ceil(chi/2): the lower
end because each perfect class is chi-bounded by its clique, the upper
end because the color classes of an optimal coloring can be merged in
bipartite (hence perfect) pairs.

A graph is nice when every induced subgraph H has chi(H) - omega(H) in
{0, 1}. It suffices to test connected subgraphs: chi and omega of a
disconnected H are the maxima over its components, so the slack of H is
at most the slack of the component attaining chi.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from . import config
from .catalog import canonical_code
from .errors import InternalInvariantError, NotTriangleFree, VertexCapExceeded
from .graphs import Graph, bits
from .holes import is_perfect
from .invariants import (
    _Deadline,
    chromatic_number,
    clique_number,
    is_k_colorable,
)

LINE_COMPLETE_CAP = 7


@dataclass(frozen=True)
class PerfectPartition:
    """Disjoint vertex classes covering the graph, each inducing a perfect
    subgraph."""

    classes: tuple  # tuple of vertex tuples

    def check(self, g: Graph) -> None:
        seen: set = set()
        for cls in self.classes:
            if not cls:
                raise InternalInvariantError("empty class in perfect partition")
            if seen & set(cls):
                raise InternalInvariantError("overlapping perfect partition")
            seen |= set(cls)
            ok, _ = is_perfect(g.induced(cls))
            if not ok:
                raise InternalInvariantError(f"class {cls} is not perfect")
        if seen != set(range(g.n)):
            raise InternalInvariantError("perfect partition does not cover")


@dataclass(frozen=True)
class NiceReport:
    is_nice: bool
    witness: Optional[Graph]  # induced subgraph with chi - omega >= 2
    witness_vertices: Optional[tuple]
    subgraphs_checked: int


def chi_p_bounds(g: Graph, timeout: Optional[float] = None) -> tuple:
    """(ceil(chi/omega), ceil(chi/2)); both ends computed exactly."""
    if g.n == 0:
        raise ValueError("chi_p_bounds: empty graph has no bounds")
    chi, _ = chromatic_number(g, timeout)
    omega, _ = clique_number(g)
    return -(-chi // omega), -(-chi // 2)


def perfect_chromatic_number(
    g: Graph, timeout: Optional[float] = None, cap: Optional[int] = None
) -> tuple:
    """Exact chi_p with a witness partition.

    Iterates the class count t from the lower bound up, assigning
    vertices in index order; a partial class that already fails the
    perfection test can never recover (imperfection is inherited by
    supergraph classes), so that branch is cut. Class-opening order is
    canonical to break symmetry.
    """
    if cap is None:
        cap = config.vertex_cap(config.CHI_P_CAP)
    if g.n > cap:
        raise VertexCapExceeded(g.n, cap, "perfect_chromatic_number")
    if g.n == 0:
        return 0, PerfectPartition(())
    perfect, _ = is_perfect(g)
    if perfect:
        return 1, PerfectPartition((tuple(range(g.n)),))
    lo, hi = chi_p_bounds(g, timeout)
    lo = max(lo, 2)
    deadline = _Deadline(config.solver_timeout(timeout), "perfect_chromatic_number")

    mask_cache: dict = {}
    code_cache: dict = {}

    def class_ok(mask: int) -> bool:
        if mask.bit_count() <= 4:
            return True  # too small to hold an odd hole or antihole
        hit = mask_cache.get(mask)
        if hit is not None:
            return hit
        sub = g.induced(list(bits(mask)))
        code = canonical_code(sub)
        verdict = code_cache.get(code)
        if verdict is None:
            verdict = is_perfect(sub)[0]
            code_cache[code] = verdict
        mask_cache[mask] = verdict
        return verdict

    for t in range(lo, hi + 1):
        classes: list = []

        def rec(v: int) -> bool:
            deadline.tick()
            if v == g.n:
                return True
            b = 1 << v
            for j in range(len(classes)):
                cand = classes[j] | b
                if class_ok(cand):
                    classes[j] = cand
                    if rec(v + 1):
                        return True
                    classes[j] = cand & ~b
            if len(classes) < t:
                classes.append(b)
                if rec(v + 1):
                    return True
                classes.pop()
            return False

        if rec(0):
            partition = PerfectPartition(
                tuple(tuple(bits(mask)) for mask in classes)
            )
            return t, partition
    raise InternalInvariantError(
        "perfect partition search failed below its proven ceiling"
    )


def chi_p_triangle_free(g: Graph, timeout: Optional[float] = None) -> int:
    """chi_p of a triangle-free graph equals ceil(chi/2): classes may as
    well be bipartite, and halving an optimal coloring achieves that."""
    omega, witness = clique_number(g)
    if omega >= 3:
        raise NotTriangleFree(witness[:3])
    if g.n == 0:
        return 0
    chi, _ = chromatic_number(g, timeout)
    return -(-chi // 2)


def is_nice(g: Graph, cap: Optional[int] = None) -> NiceReport:
    """Exact niceness verdict by sweeping connected induced subgraphs in
    decreasing size; stops at the first witness with chi - omega >= 2."""
    if cap is None:
        cap = config.vertex_cap(config.NICE_CAP)
    if g.n > cap:
        raise VertexCapExceeded(g.n, cap, "is_nice")
    checked = 0
    for size in range(g.n, 0, -1):
        for combo in combinations(range(g.n), size):
            h = g.induced(combo)
            if not h.is_connected():
                continue
            checked += 1
            if size <= 2:
                continue
            omega, _ = clique_number(h)
            if omega + 1 >= size:
                continue  # chi <= n already keeps the slack at most 1
            if is_k_colorable(h, omega + 1) is None:
                return NiceReport(
                    is_nice=False,
                    witness=h,
                    witness_vertices=tuple(combo),
                    subgraphs_checked=checked,
                )
    return NiceReport(
        is_nice=True, witness=None, witness_vertices=None, subgraphs_checked=checked
    )


def chi_p_of_line_complete(
    n: int, timeout: Optional[float] = None, cap: Optional[int] = None
) -> int:
    """chi_p of the line graph of the complete graph on n vertices."""
    from .graphs import complete, line_graph

    if cap is None:
        cap = config.vertex_cap(LINE_COMPLETE_CAP)
    if n > cap:
        raise VertexCapExceeded(n, cap, "chi_p_of_line_complete")
    if n < 2:
        return 0
    value, _ = perfect_chromatic_number(
        line_graph(complete(n)), timeout, cap=n * (n - 1) // 2
    )
    return value
