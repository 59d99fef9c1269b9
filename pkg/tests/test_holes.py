import random

import pytest

from holeforge.errors import NoBisimplicialVertex
from holeforge.graphs import (
    Graph,
    antihole,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    grotzsch,
    path,
    scott_seymour,
)
from holeforge.holes import (
    bisimplicial_elimination_coloring,
    classify,
    enumerate_induced_cycles,
    find_bisimplicial,
    has_long_hole,
    is_chordal,
    is_chordal_bipartite,
    is_perfect,
    is_weakly_chordal,
    parity_class,
)
from holeforge.invariants import clique_number, is_proper

from . import oracles
from .conftest import random_graph


def test_cycle_enumeration_known():
    rep = enumerate_induced_cycles(cycle(6), 3, 6)
    assert rep.lengths() == {6: 1}
    rep = enumerate_induced_cycles(complete(5), 3, 5)
    assert rep.lengths() == {3: 10}
    rep = enumerate_induced_cycles(antihole(7), 3, 7)
    assert rep.lengths() == {3: 7, 4: 7}
    assert enumerate_induced_cycles(path(6), 3, 6).cycles == ()
    # the house: C_5 with one chord makes a triangle and a 4-cycle
    house = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)])
    assert enumerate_induced_cycles(house, 3, 5).lengths() == {3: 1, 4: 1}


def test_cycle_enumeration_against_subset_oracle():
    rng = random.Random(13)
    for _ in range(150):
        g = random_graph(rng.randint(3, 7), rng.random(), rng)
        got = {
            frozenset(c) for c in enumerate_induced_cycles(g, 3, g.n).cycles
        }
        want = set(oracles.brute_cycles(g.n, g.adj, 3, g.n))
        assert got == want


def test_cycles_are_reported_in_traversal_order():
    for cyc in enumerate_induced_cycles(antihole(9), 4, 9).cycles:
        g = antihole(9)
        k = len(cyc)
        for i, v in enumerate(cyc):
            assert g.has_edge(v, cyc[(i + 1) % k])


def test_range_validation():
    with pytest.raises(ValueError):
        enumerate_induced_cycles(cycle(5), 2, 5)
    with pytest.raises(ValueError):
        enumerate_induced_cycles(cycle(5), 6, 5)


def test_has_long_hole():
    assert has_long_hole(cycle(5)) == (0, 1, 2, 3, 4)
    assert has_long_hole(cycle(4)) is None
    assert has_long_hole(complete(6)) is None
    assert has_long_hole(antihole(7)) is None
    assert has_long_hole(scott_seymour(2)) is None
    assert has_long_hole(cycle(9)) is not None


def test_is_chordal_known():
    ok, peo = is_chordal(complete(5))
    assert ok and sorted(peo) == [0, 1, 2, 3, 4]
    assert is_chordal(path(6))[0]
    ok, witness = is_chordal(cycle(4))
    assert not ok and len(witness) == 4
    ok, witness = is_chordal(cycle(7))
    assert not ok and len(witness) >= 4


def test_is_chordal_against_cycle_oracle():
    rng = random.Random(5)
    for _ in range(150):
        g = random_graph(rng.randint(1, 7), rng.random(), rng)
        want = not oracles.brute_cycles(g.n, g.adj, 4, g.n)
        ok, witness = is_chordal(g)
        assert ok == want
        if not ok:
            assert frozenset(witness) in set(
                oracles.brute_cycles(g.n, g.adj, 4, g.n)
            )


def test_chordal_bipartite():
    assert is_chordal_bipartite(cycle(4))
    assert is_chordal_bipartite(complete_bipartite(3, 4))
    assert not is_chordal_bipartite(cycle(6))
    assert not is_chordal_bipartite(complete(3))
    assert is_chordal_bipartite(path(7))


def test_weakly_chordal():
    assert is_weakly_chordal(complete(5))
    assert is_weakly_chordal(cycle(4))
    assert not is_weakly_chordal(cycle(5))  # self-complementary hole
    assert not is_weakly_chordal(cycle(6))
    assert not is_weakly_chordal(antihole(7))
    assert is_weakly_chordal(path(5))


def test_parity_class_examples():
    assert parity_class(cycle(6)) == "all_even"
    assert parity_class(complete(4)) == "all_odd"
    assert parity_class(path(5)) == "acyclic"
    house = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)])
    assert parity_class(house) == "mixed"
    assert parity_class(complete_bipartite(2, 3)) == "all_even"


def test_parity_crosschecks(catalog6):
    from holeforge.holes import is_bipartite

    for g in catalog6:
        tag = parity_class(g)
        if tag == "all_even":
            assert is_bipartite(g)[0]
        if tag == "all_odd":
            # no even induced cycle at all
            assert all(
                len(c) % 2 for c in enumerate_induced_cycles(g, 3, g.n).cycles
            )


def test_find_bisimplicial():
    assert find_bisimplicial(path(4)) == 0  # leaf is simplicial
    assert find_bisimplicial(cycle(5)) == 0  # two singleton cliques
    assert find_bisimplicial(cycle(6)) == 0  # op ignores parity precondition
    g = grotzsch()
    v = find_bisimplicial(g)
    if v is not None:
        nb = list(oracles.vertices_of(g.adj[v]))
        sub_n, sub_adj = oracles.sub_adj(g.n, g.adj, nb)
        comp = tuple(
            ~row & ((1 << sub_n) - 1) & ~(1 << i)
            for i, row in enumerate(sub_adj)
        )
        assert oracles.brute_chromatic(sub_n, comp) <= 2


def test_bisimplicial_coloring_on_cliques_and_chordal(rng):
    for n in (1, 4, 7):
        col = bisimplicial_elimination_coloring(complete(n))
        assert col.colors_used() == n
    # chordal graphs: exact chi, via simplicial vertices
    for _ in range(40):
        n = rng.randint(1, 9)
        adj = [0] * n
        for v in range(1, n):
            u = rng.randrange(v)
            clique = [u]
            for w in oracles.vertices_of(adj[u] & ((1 << v) - 1)):
                if all(adj[w] >> s & 1 for s in clique) and rng.random() < 0.7:
                    clique.append(w)
            for s in clique:
                adj[v] |= 1 << s
                adj[s] |= 1 << v
        g = Graph(n, adj)
        col = bisimplicial_elimination_coloring(g)
        assert is_proper(g, col)
        assert col.colors_used() == oracles.brute_chromatic(n, tuple(adj))


def test_bisimplicial_coloring_bound_even_hole_free(catalog6):
    for g in catalog6:
        tag = parity_class(g)
        if tag in ("all_odd", "acyclic"):
            col = bisimplicial_elimination_coloring(g)
            assert is_proper(g, col)
            omega, _ = clique_number(g)
            assert col.colors_used() <= 2 * omega - 1 if omega else True


def test_bisimplicial_stuck_raises():
    # C_6 itself has bisimplicial vertices but removing them strands the
    # middle of an even structure; a graph with no bisimplicial vertex at
    # all: the 3-dimensional hypercube
    q3 = Graph.from_edges(
        8,
        [
            (0, 1), (0, 2), (1, 3), (2, 3),
            (4, 5), (4, 6), (5, 7), (6, 7),
            (0, 4), (1, 5), (2, 6), (3, 7),
        ],
    )
    if find_bisimplicial(q3) is None:
        with pytest.raises(NoBisimplicialVertex):
            bisimplicial_elimination_coloring(q3)
    else:
        col = bisimplicial_elimination_coloring(q3)
        assert is_proper(q3, col)


def test_is_perfect_known():
    assert is_perfect(complete_bipartite(4, 4)) == (True, None)
    assert is_perfect(complete(5))[0]
    ok, wit = is_perfect(cycle(5))
    assert not ok and wit == ("odd_hole", (0, 1, 2, 3, 4))
    ok, wit = is_perfect(antihole(7))
    assert not ok and wit[0] == "odd_antihole" and len(wit[1]) == 7
    ok, wit = is_perfect(cycle(7))
    assert not ok and wit[0] == "odd_hole"


def test_is_perfect_against_brute(catalog6):
    for g in catalog6:
        assert is_perfect(g)[0] == oracles.brute_perfect(g.n, g.adj)


def test_classify_bundle():
    flags = classify(antihole(7))
    assert flags.long_hole_free
    assert not flags.chordal
    assert not flags.perfect
    assert flags.odd_hole_free
    assert not flags.even_hole_free
    assert flags.witnesses["perfect"][0] == "odd_antihole"
    flags = classify(empty(1))
    assert flags.chordal and flags.perfect and flags.parity == "acyclic"
    flags = classify(cycle(5))
    assert not flags.weakly_chordal and flags.parity == "all_odd"
    assert not flags.long_hole_free


def test_classify_consistency(catalog5):
    for g in catalog5:
        flags = classify(g)
        assert flags.chordal == is_chordal(g)[0]
        assert flags.long_hole_free == (has_long_hole(g) is None)
        assert flags.perfect == is_perfect(g)[0]
        if flags.chordal:
            assert flags.long_hole_free and flags.weakly_chordal
            assert flags.perfect
