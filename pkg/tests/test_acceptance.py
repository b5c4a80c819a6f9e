"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run ``python tests/test_acceptance.py`` for the bare report, or pytest for
the same lines in the "acceptance criteria" summary section.
"""

from __future__ import annotations

import time
from itertools import combinations

from conftest import collected_acceptance, zigzag

from septop.covers import (
    CliqueCover,
    clique_cover_graph,
    clique_number,
    cover_from_topology,
    hypergraph_from_cover,
    topology_from_cover,
    validate_cover,
)
from septop.critical import decompose_critical, is_g2_critical, replay
from septop.enumeration import all_posets, all_topologies, topology_families
from septop.graph import Graph, line_graph
from septop.oracle import are_isomorphic, chromatic_number, is_connected
from septop.poset import POSET_GRAPHS, Poset, topology_from_poset, upper_bound_graph
from septop.separation import AXIOMS, Axiom, graph, separated
from septop.suites import POSET_AXIOMS, anchored_graphs, chi3, incidence, normalize, thm13
from septop.topology import FiniteTopology, discrete
from septop.universe import cover_violation, topology_from_universe_cover, universe_cover_from_topology


def report(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    print(line)
    collected_acceptance.append(line)
    assert ok, line


def test_01_adjacency_matches_separation():
    start = time.perf_counter()
    counts, bad = [], None
    for n in (2, 3, 4):
        ts = list(all_topologies(n))
        counts.append(len(ts))
        for t in ts:
            for x, y in combinations(range(n), 2):
                for a in AXIOMS:
                    if (graph(t, a).has_edge(x, y)) == separated(t, x, y, a):
                        bad = bad or f"{t} ({x},{y}) {a.slug}"
    secs = time.perf_counter() - start
    report(1, "adjacency iff not separated", bad is None and counts == [4, 29, 355] and secs < 60,
           f"{sum(counts)} topologies {counts}, {secs:.1f}s" + (f", counterexample {bad}" if bad else ""))


def test_02_enumeration_cross_check():
    pre = [sum(1 for _ in all_topologies(n)) for n in (2, 3, 4)]
    fam = [len(topology_families(n)) for n in (2, 3, 4)]
    report(2, "preorder count equals family filter", pre == fam == [4, 29, 355], f"preorders {pre}, families {fam}")


# derived from the separation oracle, then frozen
ZIGZAG_EDGES = {
    Axiom.T0: set(),
    Axiom.T1: {"12", "23", "34", "45"},
    Axiom.T2: {"12", "23", "34", "45", "24"},
    Axiom.T3Prime: {"12", "23", "34", "45", "24", "13", "35"},
    Axiom.T3DoublePrime: {"12", "23", "34", "45", "24", "13", "35", "14", "25"},
    Axiom.T4: {"".join(p) for p in combinations("12345", 2)},
}


def test_03_zigzag_graphs():
    t = zigzag()
    mismatch = []
    for a, want in ZIGZAG_EDGES.items():
        oracle = {t.labels[x] + t.labels[y] for x, y in combinations(range(5), 2) if not separated(t, x, y, a)}
        built = {t.labels[x] + t.labels[y] for x, y in graph(t, a).edges}
        if not oracle == built == want:
            mismatch.append(a.slug)
    counts = [len(ZIGZAG_EDGES[a]) for a in AXIOMS]
    report(3, "five-point zigzag graphs", not mismatch, f"edge counts {counts}" + (f", mismatch {mismatch}" if mismatch else ""))


def test_04_normalization():
    start = time.perf_counter()
    results = [normalize(n) for n in (1, 2, 3, 4)]
    secs = time.perf_counter() - start
    bad = next((r.failure for r in results if r.failure), None)
    report(4, "normalizations preserve graphs and bound height", bad is None and secs < 60,
           f"{sum(r.checked for r in results)} topologies, {secs:.1f}s" + (f", counterexample {bad}" if bad else ""))


def test_05_poset_graphs():
    bad, forward = None, 0
    for n in range(1, 6):
        for p in all_posets(n):
            forward += 1
            t = topology_from_poset(p)
            for build, a in zip(POSET_GRAPHS, POSET_AXIOMS):
                if build(p).edges != graph(t, a).edges:
                    bad = bad or f"poset {p.up}: {build.__name__}"
    reverse = [thm13(n) for n in (1, 2, 3, 4)]
    bad = bad or next((r.failure for r in reverse if r.failure), None)
    report(5, "poset graphs equal separation graphs", bad is None,
           f"{forward} posets on n<=5 forward, topologies on n<=4 reverse" + (f", counterexample {bad}" if bad else ""))


def test_06_simplicial_cover_round_trip():
    bad, count = None, 0
    for n in range(1, 5):
        for t in all_topologies(n):
            count += 1
            g, c = cover_from_topology(t)
            validate_cover(g, c, need_witness=True)
            if graph(topology_from_cover(g, c), Axiom.T2).edges != g.edges:
                bad = bad or str(t)
    report(6, "simplicial cover rebuilds the T2 graph", bad is None, f"{count} topologies" + (f", counterexample {bad}" if bad else ""))


def _pipeline_instances() -> list[tuple[str, Graph, CliqueCover]]:
    out = []
    # topology -> T2 graph -> simplicial cover, the full pipeline
    sources = {
        "zigzag": zigzag(),
        "three-bottom eight-point": FiniteTopology(
            8, (0b1, 0b10, 0b100, 0b1011, 0b10111, 0b100110, 0b1000100, 0b10000001)
        ),
        "fan of triangles": FiniteTopology(7, (0b1, 0b10, 0b100, 0b1011, 0b10110, 0b100101, 0b1000111)),
    }
    for name, t in sources.items():
        g, c = cover_from_topology(t)
        out.append((name, g, c))
    bowtie = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    out.append(("bowtie", bowtie, CliqueCover((0b00111, 0b11100), (0, 3))))
    # upper bound graph of a poset with two tops over a shared base
    p = Poset.from_relations(7, [(0, 5), (1, 5), (2, 5), (2, 6), (3, 6), (4, 6), (1, 6)])
    g = upper_bound_graph(p)
    out.append(("two-top poset", g, cover_from_topology(topology_from_poset(p))[1]))
    return out


def test_07_hypergraph_line_graph():
    rows, ok = [], True
    for name, g, c in _pipeline_instances():
        start = time.perf_counter()
        k = hypergraph_from_cover(g, c)
        iso = are_isomorphic(line_graph(k), clique_cover_graph(g, c))
        secs = time.perf_counter() - start
        omega = clique_number(g)
        good = iso is not None and g.n <= 8 and omega >= 3 and secs < 10 and k.rank <= omega - 1
        ok &= good
        rows.append(f"{name} (n={g.n}, k={omega}, rank {k.rank}{'' if good else ', FAILED'})")
    report(7, "hypergraph line graph is the clique cover graph", ok and len(rows) >= 5, "; ".join(rows))


def test_08_anchored_stars():
    gs = anchored_graphs(8, 3)
    bad = [g for g in gs if not is_g2_critical(g)]
    undone = [g for g in gs if (s := decompose_critical(g)) is None or replay(g, s).edges != g.edges]
    hexagon = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    negatives = [Graph.complete(3), Graph.complete(4), hexagon]
    wrongly = [g for g in negatives if is_g2_critical(g)]
    ok = not bad and not undone and not wrongly
    report(8, "anchored stars are exactly the critical graphs", ok,
           f"{len(gs)} compositions of <=3 anchorings (<=8 vertices) critical and decomposed; K3, K4, chorded C6 rejected"
           if ok else f"{len(bad)} not critical, {len(undone)} not decomposed, {len(wrongly)} negatives accepted")


def test_09_universe_cover_round_trip():
    bad, count = None, 0
    for n in range(1, 5):
        for t in all_topologies(n):
            count += 1
            g, uc = universe_cover_from_topology(t)
            if cover_violation(g, uc) is not None:
                bad = bad or f"{t}: {cover_violation(g, uc)}"
            elif graph(topology_from_universe_cover(g, uc), Axiom.T3Prime).edges != g.edges:
                bad = bad or str(t)
    report(9, "universe cover rebuilds the T3' graph", bad is None, f"{count} topologies" + (f", counterexample {bad}" if bad else ""))


def test_10_chromatic_bound():
    results = [chi3(n) for n in (1, 2, 3, 4)]
    bad = next((r.failure for r in results if r.failure), None)
    connected = sum(
        1
        for n in range(3, 5)
        for t in all_topologies(n)
        for a in (Axiom.T3Prime, Axiom.T3DoublePrime, Axiom.T4)
        if is_connected(graph(t, a))
    )
    g = graph(discrete(3), Axiom.T4)
    note = f"discrepancy noted: discrete topology on 3 points gives an edgeless graph with chromatic number {chromatic_number(g)}"
    report(10, "connected T3'/T3''/T4 graphs need three colors", bad is None,
           f"{connected} connected graphs on 3-4 vertices checked; {note}" + (f", counterexample {bad}" if bad else ""))


def test_11_incidence_topology():
    r = incidence()
    report(11, "incidence topology restores H", r.passed, f"{r.checked} graphs (P3, C4, C5, K4)" + (f", {r.failure}" if r.failure else ""))


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
