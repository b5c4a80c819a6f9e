from __future__ import annotations

from itertools import combinations

import pytest
from conftest import pts, topologies
from hypothesis import given, settings

from septop import bits
from septop.enumeration import all_topologies
from septop.errors import SamePoint
from septop.graph import Graph
from septop.oracle import distance
from septop.separation import AXIOMS, Axiom, adjacent, graph, graph_chain, separated
from septop.topology import FiniteTopology, discrete, indiscrete, subspace


def edge_names(g: Graph) -> set[str]:
    return {g.labels[u] + g.labels[v] for u, v in g.edges}


class TestAxiom:
    def test_order_and_slugs(self):
        assert [a.slug for a in AXIOMS] == ["t0", "t1", "t2", "t3p", "t3pp", "t4"]
        assert Axiom.T0 < Axiom.T3Prime < Axiom.T3DoublePrime < Axiom.T4

    def test_parse(self):
        assert Axiom.parse("T3PP") is Axiom.T3DoublePrime
        assert Axiom.parse("t3prime") is Axiom.T3Prime
        with pytest.raises(ValueError):
            Axiom.parse("t5")


class TestSeparated:
    def test_regular_ends(self, zz):
        assert separated(zz, 0, 4, Axiom.T3DoublePrime)
        assert not separated(zz, 0, 4, Axiom.T4)

    @pytest.mark.parametrize("a", AXIOMS)
    def test_indiscrete_never_separates(self, a):
        t = indiscrete(3)
        assert not any(separated(t, x, y, a) for x, y in combinations(range(3), 2))

    def test_same_point(self, zz):
        with pytest.raises(SamePoint):
            separated(zz, 1, 1, Axiom.T2)
        with pytest.raises(SamePoint):
            adjacent(zz, 1, 1, Axiom.T2)


class TestAdjacent:
    def test_formulas(self, zz):
        assert adjacent(zz, 1, 3, Axiom.T2)
        assert not adjacent(zz, 0, 3, Axiom.T3Prime)
        assert adjacent(zz, 0, 3, Axiom.T3DoublePrime)

    @pytest.mark.parametrize("a", AXIOMS)
    def test_discrete_never_adjacent(self, a):
        t = discrete(4)
        assert not any(adjacent(t, x, y, a) for x, y in combinations(range(4), 2))


class TestGraphs:
    def test_zigzag_graphs(self, zz):
        g0, g1, g2, g3p, g3pp, g4 = graph_chain(zz)
        assert edge_names(g0) == set()
        assert edge_names(g1) == {"12", "23", "34", "45"}
        assert edge_names(g2) == edge_names(g1) | {"24"}
        assert edge_names(g3p) == edge_names(g2) | {"13", "35"}
        assert edge_names(g3pp) == edge_names(g3p) | {"14", "25"}
        assert g4.edges == Graph.complete(5).edges
        assert [g.m for g in (g0, g1, g2, g3p, g3pp, g4)] == [0, 4, 5, 7, 9, 10]

    def test_labels_kept(self, zz):
        assert graph(zz, Axiom.T1).labels == zz.labels

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_indiscrete_and_discrete(self, n):
        assert all(g.edges == Graph.complete(n).edges for g in graph_chain(indiscrete(n)))
        assert all(not g.edges for g in graph_chain(discrete(n)))


@settings(max_examples=60, deadline=None)
@given(topologies(max_n=5))
def test_formulas_match_oracle(t):
    for x, y in combinations(range(t.n), 2):
        for a in AXIOMS:
            assert adjacent(t, x, y, a) == (not separated(t, x, y, a))


@settings(max_examples=150, deadline=None)
@given(topologies())
def test_symmetric_and_monotone(t):
    for x, y in combinations(range(t.n), 2):
        row = [adjacent(t, x, y, a) for a in AXIOMS]
        assert row == [adjacent(t, y, x, a) for a in AXIOMS]
        assert row == sorted(row)  # False entries come first
    graph_chain(t)


def test_subspace_adjacency_lifts():
    for n in range(2, 5):
        for t in all_topologies(n):
            for s in range(1, 1 << n):
                if bits.popcount(s) < 2:
                    continue
                sub, old = subspace(t, s)
                for a in AXIOMS:
                    for i, j in combinations(range(sub.n), 2):
                        if adjacent(sub, i, j, a):
                            assert adjacent(t, old[i], old[j], a)


BOUND = {Axiom.T1: 1, Axiom.T2: 2, Axiom.T3Prime: 3, Axiom.T3DoublePrime: 3, Axiom.T4: 4}


def test_distance_bound_in_comparability_graph():
    for n in range(2, 5):
        for t in all_topologies(n):
            h = graph(t, Axiom.T1)
            for a, k in BOUND.items():
                for x, y in graph(t, a).edges:
                    assert distance(h, x, y) <= k


def test_tight_distance_examples():
    # a zigzag path 0 < 1 > 2 < 3 > 4 ... reaches the bound for T2, T3', T4
    t = FiniteTopology(5, (0b00001, 0b00111, 0b00100, 0b11100, 0b10000))
    h = graph(t, Axiom.T1)
    assert distance(h, 1, 3) == 2 and adjacent(t, 1, 3, Axiom.T2)
    assert distance(h, 0, 2) == 2 and adjacent(t, 0, 2, Axiom.T3Prime)
    assert distance(h, 0, 4) == 4 and adjacent(t, 0, 4, Axiom.T4)


def _is_cluster(g: Graph) -> bool:
    return all(g.is_clique(g.closed_neighbors(v)) for v in range(g.n))


def test_t0_graphs_are_disjoint_cliques():
    seen = set()
    for n in range(1, 6):
        for t in all_topologies(n):
            g = graph(t, Axiom.T0)
            assert _is_cluster(g)
            seen.add((n, g.edges))
    # every labeled disjoint union of cliques on up to five vertices arises
    for n in range(1, 6):
        pairs = list(combinations(range(n), 2))
        for m in range(1 << len(pairs)):
            g = Graph.from_edges(n, [pairs[i] for i in bits.members(m)])
            if _is_cluster(g):
                assert (n, g.edges) in seen


def test_disjoint_cliques_from_indiscrete_blocks():
    # blocks {0,1,2} and {3,4}: each block is one indiscrete component
    block = (0b00111, 0b00111, 0b00111, 0b11000, 0b11000)
    g = graph(FiniteTopology(5, block), Axiom.T0)
    assert g.edges == {(0, 1), (0, 2), (1, 2), (3, 4)}
