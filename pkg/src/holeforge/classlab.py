"""Evidence engine: conjecture checkers, hereditary slack, antichain
verification, forbidden-sequence realization, and corpus generation.

Nothing here proves anything. Sweeps either fail to find a counterexample
(evidence) or surface one loudly with a replayable witness.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

from . import config
from .catalog import canonical_code, enumerate_graphs
from .embed import is_induced_subgraph
from .errors import LongHoleDetected, SolverTimeout, VertexCapExceeded
from .graphs import (
    Graph,
    antihole,
    bits,
    complete,
    cycle,
    disjoint_union,
    mask_of,
    substitute,
)
from .holes import has_long_hole
from .invariants import chromatic_number, clique_number, stability_number

BIPARTITION_CAP = 16
ANTICOMPLETE_CAP = 14


@dataclass(frozen=True)
class SlackReport:
    """Largest violation of alpha*omega >= n over the induced subgraphs,
    floored at zero. Zero slack is exactly perfection."""

    slack: int
    witness: tuple  # vertex set attaining the maximum


@dataclass(frozen=True)
class AntichainReport:
    count: int
    is_antichain: bool
    offending: Optional[tuple]  # (i, j, embedding): graphs[i] inside graphs[j]


@dataclass(frozen=True)
class SequenceItem:
    n: int
    requested: int
    available: Optional[int]  # None when beyond the enumeration cap
    selected: tuple  # chosen connected 4-regular graphs on n vertices
    feasible: bool


@dataclass(frozen=True)
class ForbiddenSequenceRealization:
    """Antichain of connected 4-regular graphs realizing per-size counts.

    The hereditary class defined by forbidding the selection has exactly
    the requested number of minimal obstructions at each feasible size.
    Sizes where the catalog has too few graphs are flagged, not faked."""

    items: tuple

    def selection(self) -> list:
        out = []
        for item in self.items:
            out.extend(item.selected)
        return out


@dataclass(frozen=True)
class EHReport:
    n: int
    alpha: int
    omega: int
    exponent: float


@dataclass(frozen=True)
class ChiOmegaSqReport:
    omega: int
    chi: int
    omega_sq: int
    holds: bool


def _maximal_cliques(adj: Sequence[int], universe: int) -> list:
    """Bron-Kerbosch with pivoting; returns clique bitmasks."""
    out = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda v: (adj[v] & p).bit_count())
        for v in bits(p & ~adj[pivot]):
            b = 1 << v
            bk(r | b, p & adj[v], x & adj[v])
            p &= ~b
            x |= b

    if universe:
        bk(0, universe, 0)
    return out


def check_bipartition_conjecture(
    g: Graph, cap: Optional[int] = None
) -> Optional[tuple]:
    """A vertex bipartition with no maximum clique inside either side, or
    None if exhaustive search refutes this instance.

    Requires a long-hole-free input (checked). Maximum cliques are
    pre-enumerated; the side assignment backtracks, cutting a branch as
    soon as some maximum clique is swallowed whole.

    Edgeless graphs are vacuous: the conjecture quantifies over graphs
    with at least one edge (with omega = 1 every nonempty side holds a
    maximum clique, so no bipartition could ever qualify). They get the
    trivial partition, never a refutation.
    """
    if cap is None:
        cap = config.vertex_cap(BIPARTITION_CAP)
    if g.n > cap:
        raise VertexCapExceeded(g.n, cap, "check_bipartition_conjecture")
    hole = has_long_hole(g)
    if hole is not None:
        raise LongHoleDetected(hole)
    if g.n == 0:
        return (), ()
    omega, _ = clique_number(g)
    if omega <= 1:
        return tuple(range(g.n)), ()
    full = (1 << g.n) - 1
    cliques = [
        m for m in _maximal_cliques(g.adj, full) if m.bit_count() == omega
    ]
    by_vertex = [[] for _ in range(g.n)]
    for q in cliques:
        for v in bits(q):
            by_vertex[v].append(q)

    def rec(v: int, smask: int, tmask: int) -> Optional[tuple]:
        if v == g.n:
            return smask, tmask
        for side_s in (True, False):
            if v == 0 and not side_s:
                continue  # swapping sides is a symmetry
            ns = smask | (1 << v) if side_s else smask
            nt = tmask if side_s else tmask | (1 << v)
            bad = False
            for q in by_vertex[v]:
                if q & ~ns == 0 or q & ~nt == 0:
                    bad = True
                    break
            if not bad:
                got = rec(v + 1, ns, nt)
                if got is not None:
                    return got
        return None

    got = rec(0, 0, 0)
    if got is None:
        return None
    return tuple(bits(got[0])), tuple(bits(got[1]))


def check_chi_omega_sq(g: Graph, timeout: Optional[float] = None) -> ChiOmegaSqReport:
    """Record whether chi <= omega^2 holds for this graph."""
    omega, _ = clique_number(g)
    chi, _ = chromatic_number(g, timeout)
    return ChiOmegaSqReport(
        omega=omega, chi=chi, omega_sq=omega * omega, holds=chi <= omega * omega
    )


def gyarfas_slack(g: Graph, cap: Optional[int] = None) -> SlackReport:
    """max over induced subgraphs H of |V(H)| - alpha(H) * omega(H),
    floored at 0, with a witness subgraph.

    All subsets are visited (disconnected subgraphs can carry the maximum,
    unlike the niceness sweep); alpha and omega are memoized per canonical
    code."""
    if cap is None:
        cap = config.vertex_cap(config.SLACK_CAP)
    if g.n > cap:
        raise VertexCapExceeded(g.n, cap, "gyarfas_slack")
    memo: dict = {}
    best = 0
    best_witness: tuple = ()
    for mask in range(1 << g.n):
        verts = tuple(bits(mask))
        k = len(verts)
        if k == 0:
            continue
        sub = g.induced(verts)
        code = canonical_code(sub)
        got = memo.get(code)
        if got is None:
            got = (clique_number(sub)[0], stability_number(sub)[0])
            memo[code] = got
        omega, alpha = got
        value = k - alpha * omega
        if value > best:
            best = value
            best_witness = verts
    return SlackReport(slack=best, witness=best_witness)


def _anticomplete(g: Graph, m1: int, m2: int) -> bool:
    if m1 & m2:
        return False
    for v in bits(m1):
        if g.adj[v] & m2:
            return False
    return True


def max_anticomplete_odd_holes(g: Graph, cap: Optional[int] = None) -> tuple:
    """Largest family of pairwise anticomplete induced odd cycles of
    length >= 5, with the family itself."""
    if cap is None:
        cap = config.vertex_cap(ANTICOMPLETE_CAP)
    if g.n > cap:
        raise VertexCapExceeded(g.n, cap, "max_anticomplete_odd_holes")
    if g.n < 5:
        return 0, []
    from .holes import enumerate_induced_cycles

    report = enumerate_induced_cycles(g, 5, g.n)
    if report.truncated:
        raise VertexCapExceeded(g.n, cap, "odd hole enumeration truncated")
    holes = [c for c in report.cycles if len(c) % 2 == 1]
    masks = [mask_of(c) for c in holes]
    h = len(holes)
    if h == 0:
        return 0, []
    # maximum independent set in the conflict relation, by direct search
    compat = [0] * h
    for i in range(h):
        for j in range(i + 1, h):
            if _anticomplete(g, masks[i], masks[j]):
                compat[i] |= 1 << j
                compat[j] |= 1 << i
    best: list = []

    def rec(chosen: list, allowed: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen[:]
        if not allowed:
            return
        if len(chosen) + allowed.bit_count() <= len(best):
            return
        i = next(bits(allowed))
        rec(chosen + [i], allowed & compat[i])
        rec(chosen, allowed & ~(1 << i))

    rec([], (1 << h) - 1)
    return len(best), [holes[i] for i in best]


def eh_exponent(g: Graph) -> EHReport:
    """log(max(alpha, omega)) / log(n): how far this graph is from the
    polynomial stable-set-or-clique guarantee."""
    if g.n < 2:
        raise ValueError("eh_exponent: need at least 2 vertices")
    alpha, _ = stability_number(g)
    omega, _ = clique_number(g)
    return EHReport(
        n=g.n,
        alpha=alpha,
        omega=omega,
        exponent=math.log(max(alpha, omega)) / math.log(g.n),
    )


def verify_antichain(graphs: Sequence[Graph]) -> AntichainReport:
    """No listed graph may embed induced into another; first offending
    ordered pair reported with its embedding."""
    gs = list(graphs)
    for i in range(len(gs)):
        for j in range(len(gs)):
            if i == j:
                continue
            emb = is_induced_subgraph(gs[i], gs[j])
            if emb is not None:
                return AntichainReport(
                    count=len(gs), is_antichain=False, offending=(i, j, emb)
                )
    return AntichainReport(count=len(gs), is_antichain=True, offending=None)


def enumerate_connected_4_regular(n: int, cap: Optional[int] = None) -> list:
    """All connected 4-regular graphs on n vertices, one per isomorphism
    class, via degree-capped catalog enumeration."""
    if n < 5:
        raise ValueError(f"no 4-regular graphs on {n} < 5 vertices")
    out = []
    for g in enumerate_graphs(
        n,
        lambda h: all(h.degree(v) <= 4 for v in range(h.n)),
        hereditary=True,
        cap=cap,
    ):
        if g.is_connected() and all(g.degree(v) == 4 for v in range(g.n)):
            out.append(g)
    return out


def realize_forbidden_sequence(
    counts: Sequence[int], cap: Optional[int] = None
) -> ForbiddenSequenceRealization:
    """Select counts[i] connected 4-regular graphs on i+1 vertices, per
    size. Sizes with too few graphs available (or beyond the enumeration
    cap) are flagged infeasible; that is data, not an error."""
    if cap is None:
        cap = config.vertex_cap(config.ENUMERATION_CAP)
    items = []
    for i, want in enumerate(counts):
        n = i + 1
        if want < 0:
            raise ValueError(f"negative request at size {n}")
        if n < 5:
            items.append(
                SequenceItem(
                    n=n,
                    requested=want,
                    available=0,
                    selected=(),
                    feasible=want == 0,
                )
            )
            continue
        if n > cap:
            items.append(
                SequenceItem(
                    n=n,
                    requested=want,
                    available=None,
                    selected=(),
                    feasible=want == 0,
                )
            )
            continue
        pool = enumerate_connected_4_regular(n, cap=cap)
        items.append(
            SequenceItem(
                n=n,
                requested=want,
                available=len(pool),
                selected=tuple(pool[:want]),
                feasible=want <= len(pool),
            )
        )
    return ForbiddenSequenceRealization(items=tuple(items))


def class_membership(g: Graph, forbidden: Sequence[Graph]) -> bool:
    """Member of the hereditary class excluding every forbidden graph as
    an induced subgraph."""
    return all(is_induced_subgraph(h, g) is None for h in forbidden)


@dataclass(frozen=True)
class F4Report:
    """Best exact chromatic number seen among generated long-hole-free
    graphs of the target clique number: a lower bound for the extremal
    function, never an answer."""

    target_omega: int
    best_chi: int
    witness: Optional[Graph]
    witness_source: Optional[str]
    graphs_examined: int
    timeouts: int


def f4_search(
    target_omega: int = 4,
    exhaustive_max_n: int = 7,
    substitution_trials: int = 60,
    random_trials: int = 200,
    random_max_n: int = 11,
    seed: int = 0,
    timeout: float = 10.0,
    max_n: int = 60,
) -> F4Report:
    """Hunt for long-hole-free graphs with the given clique number and
    large chromatic number. Exact-chi timeouts count as unknown."""
    rng = random.Random(seed)
    best_chi = 0
    witness: Optional[Graph] = None
    source: Optional[str] = None
    examined = 0
    timeouts = 0
    seen: set = set()

    def consider(g: Graph, tag: str) -> None:
        nonlocal best_chi, witness, source, examined, timeouts
        if g.n > max_n:
            return
        if g.n <= 12:
            code = canonical_code(g)
            if code in seen:
                return
            seen.add(code)
        if clique_number(g)[0] != target_omega:
            return
        examined += 1
        try:
            chi, _ = chromatic_number(g, timeout)
        except SolverTimeout:
            timeouts += 1
            return
        if chi > best_chi:
            best_chi = chi
            witness = g
            source = tag

    # exhaustive small catalogs, pruned to the long-hole-free cones
    for n in range(1, exhaustive_max_n + 1):
        for g in enumerate_graphs(
            n, lambda h: has_long_hole(h) is None, hereditary=True
        ):
            consider(g, f"exhaustive n={n}")

    # substitution compositions over long-hole-free seeds (closed under
    # substitution, so no re-verification is needed); all two-part joins
    # first, then random deeper compositions
    pool = [complete(1), complete(2), complete(3), cycle(4), antihole(7)]
    for i, a in enumerate(pool):
        for b in pool[i:]:
            consider(substitute(complete(2), [a, b]), f"join {a.n}+{b.n}")
    for t in range(substitution_trials):
        base = rng.choice(pool)
        parts = [rng.choice(pool) for _ in range(base.n)]
        g = substitute(base, parts)
        if g.n <= 12 and rng.random() < 0.4:
            g = substitute(g, [rng.choice(pool) for _ in range(g.n)])
        consider(g, f"substitution trial={t}")

    # rejection-sampled random graphs
    for t in range(random_trials):
        n = rng.randint(5, random_max_n)
        p = rng.uniform(0.2, 0.8)
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        g = Graph(n, adj)
        if has_long_hole(g) is None:
            consider(g, f"random trial={t}")

    return F4Report(
        target_omega=target_omega,
        best_chi=best_chi,
        witness=witness,
        witness_source=source,
        graphs_examined=examined,
        timeouts=timeouts,
    )


def is_planar(g: Graph) -> bool:
    """Planarity via the library embedding test."""
    import networkx as nx

    if g.n <= 4:
        return True
    if g.m > 3 * g.n - 6:
        return False
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    ok, _ = nx.check_planarity(nxg)
    return ok


def random_chordal(n: int, rng: random.Random, attach: float = 0.6) -> Graph:
    """Chordal by construction: each new vertex attaches to a clique
    grown greedily inside an earlier vertex's neighborhood."""
    adj = [0] * n
    for v in range(1, n):
        u = rng.randrange(v)
        clique = [u]
        cands = list(bits(adj[u] & ((1 << v) - 1)))
        rng.shuffle(cands)
        for w in cands:
            if all(adj[w] & (1 << s) for s in clique) and rng.random() < attach:
                clique.append(w)
        for s in clique:
            adj[v] |= 1 << s
            adj[s] |= 1 << v
    return Graph._raw(n, tuple(adj))


def _random_substitution(rng: random.Random, max_n: int) -> Graph:
    seeds = [complete(1), complete(2), antihole(7)]
    g = rng.choice(seeds)
    for _ in range(4):
        if g.n * 7 > max_n:
            break
        parts = [rng.choice(seeds) for _ in range(g.n)]
        if rng.random() < 0.5:
            g = substitute(g, parts)
    return g


def corpus(kind: str, **params) -> Iterator[Graph]:
    """Seeded graph streams for sweeps; identical parameters replay the
    identical stream.

    kinds: random_chordal (count, n_max, seed, attach);
    random_long_hole_free (count, n, p, seed, max_attempts: rejection
    sampling, stops early if attempts run out); substitution_closure
    (count, max_n, seed); exhaustive (n, predicate, hereditary).
    """
    if kind == "random_chordal":
        count = params.get("count", 100)
        n_max = params.get("n_max", 30)
        rng = random.Random(params.get("seed", 0))
        for _ in range(count):
            yield random_chordal(rng.randint(1, n_max), rng, params.get("attach", 0.6))
    elif kind == "random_long_hole_free":
        count = params.get("count", 50)
        n = params.get("n", 10)
        p = params.get("p", 0.4)
        attempts = params.get("max_attempts", 20000)
        rng = random.Random(params.get("seed", 0))
        made = 0
        for _ in range(attempts):
            if made >= count:
                break
            adj = [0] * n
            for u in range(n):
                for v in range(u + 1, n):
                    if rng.random() < p:
                        adj[u] |= 1 << v
                        adj[v] |= 1 << u
            g = Graph._raw(n, tuple(adj))
            if has_long_hole(g) is None:
                made += 1
                yield g
    elif kind == "substitution_closure":
        count = params.get("count", 50)
        max_n = params.get("max_n", 60)
        rng = random.Random(params.get("seed", 0))
        for _ in range(count):
            yield _random_substitution(rng, max_n)
    elif kind == "exhaustive":
        yield from enumerate_graphs(
            params["n"],
            params.get("predicate"),
            hereditary=params.get("hereditary", False),
        )
    else:
        raise ValueError(f"unknown corpus kind {kind!r}")
