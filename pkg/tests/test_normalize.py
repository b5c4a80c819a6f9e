from __future__ import annotations

import pytest
from conftest import topologies
from hypothesis import given, settings

from septop.errors import AxiomOutOfRange
from septop.normalize import distinguish_minimal_sets, reduce_height_2, reduce_height_3
from septop.separation import AXIOMS, Axiom, graph
from septop.topology import FiniteTopology, height, indiscrete

HEIGHT3 = (Axiom.T3Prime, Axiom.T3DoublePrime, Axiom.T4)


def same_graphs(a: FiniteTopology, b: FiniteTopology, axioms) -> bool:
    return all(graph(a, x).edges == graph(b, x).edges for x in axioms)


class TestDistinguish:
    def test_indiscrete_triangle(self):
        t = indiscrete(3)
        d = distinguish_minimal_sets(t)
        assert len(set(d.mins)) == 3
        assert graph(d, Axiom.T2).m == 3

    def test_fixpoint(self, zz):
        assert distinguish_minimal_sets(zz) is zz

    def test_one_step_pair(self):
        d = distinguish_minimal_sets(indiscrete(2))
        # least pair (0, 1): the open set m(0) minus {1} is adjoined
        assert d.mins == (0b01, 0b11)

    def test_t0_graph_not_preserved(self):
        t = indiscrete(2)
        assert graph(t, Axiom.T0).m == 1
        assert graph(distinguish_minimal_sets(t), Axiom.T0).m == 0


class TestHeightTwo:
    def test_nested_chain(self):
        t = FiniteTopology(3, (0b001, 0b011, 0b111))
        r = reduce_height_2(t)
        assert height(r) == 2
        assert graph(r, Axiom.T2).m == 3

    def test_fixpoints(self, zz):
        assert reduce_height_2(zz) is zz
        t = FiniteTopology(3, (0b001, 0b011, 0b101))
        assert reduce_height_2(t) is t

    def test_repeated_middle(self):
        # m(v2) = m(v3): a literal single step would break the T2 graph here
        t = FiniteTopology(4, (0b0001, 0b0010, 0b1101, 0b1101))
        r = reduce_height_2(t)
        assert height(r) <= 2
        assert graph(r, Axiom.T2).edges == graph(t, Axiom.T2).edges


class TestHeightThree:
    def test_four_chain(self):
        t = FiniteTopology(4, (0b0001, 0b0011, 0b0111, 0b1111))
        r = reduce_height_3(t, Axiom.T4)
        assert height(r) == 3
        assert graph(r, Axiom.T4).m == 6

    def test_fixpoints(self, zz):
        t = FiniteTopology(3, (0b001, 0b011, 0b111))
        assert reduce_height_3(t, Axiom.T3Prime) is t
        assert reduce_height_3(zz, Axiom.T4) is zz

    def test_repeated_top(self):
        # m(v3) = m(v4): the literal step removes nothing and would loop
        t = FiniteTopology(4, (0b0001, 0b0011, 0b1111, 0b1111))
        for a in HEIGHT3:
            r = reduce_height_3(t, a)
            assert height(r) <= 3
            assert graph(r, a).edges == graph(t, a).edges

    @pytest.mark.parametrize("a", [Axiom.T0, Axiom.T1, Axiom.T2])
    def test_axiom_out_of_range(self, a):
        with pytest.raises(AxiomOutOfRange):
            reduce_height_3(indiscrete(2), a)


@settings(max_examples=80, deadline=None)
@given(topologies(max_n=6))
def test_transforms_preserve_graphs(t):
    d = distinguish_minimal_sets(t)
    assert len(set(d.mins)) == d.n
    assert same_graphs(d, t, AXIOMS[1:])
    assert distinguish_minimal_sets(d) == d
    r2 = reduce_height_2(t)
    assert height(r2) <= 2 and same_graphs(r2, t, [Axiom.T2])
    assert reduce_height_2(r2) == r2
    for a in HEIGHT3:
        r3 = reduce_height_3(t, a)
        assert height(r3) <= 3 and same_graphs(r3, t, [a])
        assert reduce_height_3(r3, a) == r3


@settings(max_examples=40, deadline=None)
@given(topologies(max_n=6))
def test_composition_preserves_graphs(t):
    r = reduce_height_2(distinguish_minimal_sets(t))
    assert same_graphs(r, t, [Axiom.T2])
    for a in HEIGHT3:
        r = reduce_height_3(distinguish_minimal_sets(t), a)
        assert same_graphs(r, t, [a])
