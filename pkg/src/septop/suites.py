"""Named exhaustive property suites, shared by the CLI and the test suite.

Each suite returns a ``SuiteResult``; ``failure`` holds the first
counterexample found, or None when every instance passed.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from itertools import combinations

from . import bits
from .covers import (
    clique_cover_graph,
    cover_from_topology,
    greedy_simplicial_cover,
    hypergraph_from_cover,
    is_edge_simplicial,
    topology_from_cover,
    validate_cover,
)
from .critical import anchor_star, decompose_critical, is_g2_critical, replay
from .enumeration import all_posets, all_topologies, topology_families
from .errors import SeptopError, UnknownSuite
from .graph import Graph, line_graph
from .normalize import distinguish_minimal_sets, reduce_height_2, reduce_height_3
from .oracle import are_isomorphic, chromatic_number, is_connected
from .poset import POSET_GRAPHS, poset_from_topology, topology_from_poset
from .separation import AXIOMS, Axiom, adjacent, graph, separated
from .topology import FiniteTopology, discrete, height, incidence_topology
from .universe import cover_violation, topology_from_universe_cover, universe_cover_from_topology

POSET_AXIOMS = (Axiom.T1, Axiom.T2, Axiom.T3Prime, Axiom.T3DoublePrime, Axiom.T4)
HEIGHT3_AXIOMS = (Axiom.T3Prime, Axiom.T3DoublePrime, Axiom.T4)


@dataclass
class SuiteResult:
    name: str
    n: int
    checked: int = 0
    failure: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure is None

    def report(self) -> str:
        head = f"{self.name} n={self.n}: {'PASS' if self.passed else 'FAIL'} ({self.checked} checked)"
        lines = [head]
        if self.failure:
            lines.append(f"  counterexample: {self.failure}")
        lines += [f"  note: {s}" for s in self.notes]
        return "\n".join(lines)


def _sweep(name: str, n: int, items: Iterator, check: Callable[[object], str | None]) -> SuiteResult:
    res = SuiteResult(name, n)
    for item in items:
        res.checked += 1
        why = check(item)
        if why:
            res.failure = why
            break
    return res


def _edges(g: Graph) -> str:
    return "{" + ", ".join(g.labels[u] + g.labels[v] for u, v in g.sorted_edges()) + "}"


# separation


def lemma31(n: int) -> SuiteResult:
    """Adjacency formulas agree with the open/closed-set separation oracle."""

    def check(t: FiniteTopology) -> str | None:
        for x, y in combinations(range(t.n), 2):
            for a in AXIOMS:
                if adjacent(t, x, y, a) == separated(t, x, y, a):
                    return f"{t} pair ({x},{y}) axiom {a.slug}"
        return None

    return _sweep("lemma31", n, all_topologies(n), check)


def monotone(n: int) -> SuiteResult:
    """Edge sets grow along T0, T1, T2, T3', T3'', T4."""

    def check(t: FiniteTopology) -> str | None:
        gs = [graph(t, a) for a in AXIOMS]
        for a, lo, hi in zip(AXIOMS[1:], gs, gs[1:]):
            if not lo.edges <= hi.edges:
                return f"{t}: edges before {a.slug} not inside {a.slug}"
        return None

    return _sweep("monotone", n, all_topologies(n), check)


def enumeration(n: int) -> SuiteResult:
    """Preorder enumeration count equals the subset-family filter count."""
    res = SuiteResult("enumeration", n, checked=1)
    a = sum(1 for _ in all_topologies(n))
    b = len(topology_families(n))
    res.notes.append(f"preorders {a}, families {b}")
    if a != b:
        res.failure = f"preorder count {a} != family count {b}"
    return res


# normalization


def normalize(n: int) -> SuiteResult:
    def check(t: FiniteTopology) -> str | None:
        d = distinguish_minimal_sets(t)
        if len(set(d.mins)) != d.n:
            return f"{t}: minimal sets still repeat"
        for a in AXIOMS[1:]:
            if graph(d, a).edges != graph(t, a).edges:
                return f"{t}: distinguish_minimal_sets changes G_{a.slug}"
        r2 = reduce_height_2(t)
        if height(r2) > 2 or graph(r2, Axiom.T2).edges != graph(t, Axiom.T2).edges:
            return f"{t}: reduce_height_2 gives {r2}"
        for a in HEIGHT3_AXIOMS:
            r3 = reduce_height_3(t, a)
            if height(r3) > 3 or graph(r3, a).edges != graph(t, a).edges:
                return f"{t}: reduce_height_3 ({a.slug}) gives {r3}"
        for f in (distinguish_minimal_sets, reduce_height_2):
            once = f(t)
            if f(once) != once:
                return f"{t}: {f.__name__} is not idempotent"
        return None

    return _sweep("normalize", n, all_topologies(n), check)


# posets


def thm13(n: int) -> SuiteResult:
    """Poset graphs match the separation graphs of the poset topology, both ways."""

    def forward(p) -> str | None:
        t = topology_from_poset(p)
        for build, a in zip(POSET_GRAPHS, POSET_AXIOMS):
            if build(p).edges != graph(t, a).edges:
                return f"poset up-sets {p.up}: {build.__name__} != G_{a.slug}"
        return None

    res = _sweep("thm13", n, all_posets(n), forward)
    if not res.passed:
        return res

    def reverse(t: FiniteTopology) -> str | None:
        for build, a in zip(POSET_GRAPHS, POSET_AXIOMS):
            flat = distinguish_minimal_sets(t)
            if a is Axiom.T2:
                flat = reduce_height_2(flat)
            elif a in HEIGHT3_AXIOMS:
                flat = reduce_height_3(flat, a)
            p = poset_from_topology(flat)
            if build(p).edges != graph(t, a).edges:
                return f"{t}: {build.__name__} of its poset != G_{a.slug}"
        return None

    back = _sweep("thm13", n, all_topologies(n), reverse)
    back.checked += res.checked
    return back


# clique covers


def thm51(n: int) -> SuiteResult:
    """Simplicial cover from a topology rebuilds the same T2 graph."""

    def check(t: FiniteTopology) -> str | None:
        g, c = cover_from_topology(t)
        validate_cover(g, c, need_witness=True)
        back = graph(topology_from_cover(g, c), Axiom.T2)
        if back.edges != g.edges:
            return f"{t}: rebuilt {_edges(back)} vs {_edges(g)}"
        if not is_edge_simplicial(g) or greedy_simplicial_cover(g) is None:
            return f"{t}: G2 not recognised as edge-simplicial"
        return None

    return _sweep("thm51", n, all_topologies(n), check)


def thm52(n: int) -> SuiteResult:
    """Line graph of the cover hypergraph is isomorphic to the clique cover graph."""

    def check(t: FiniteTopology) -> str | None:
        g, c = cover_from_topology(t)
        h = clique_cover_graph(g, c)
        k = hypergraph_from_cover(g, c)
        if are_isomorphic(line_graph(k), h) is None:
            return f"{t}: line graph not isomorphic to clique cover graph"
        return None

    return _sweep("thm52", n, all_topologies(n), check)


# criticality


def anchored_graphs(max_vertices: int = 8, max_steps: int = 3) -> list[Graph]:
    """Every distinct labeled graph built from K1 by 1..max_steps anchorings."""
    found: dict[frozenset, Graph] = {}

    def grow(g: Graph, steps: int) -> None:
        if steps:
            found.setdefault(g.edges, g)
        if steps == max_steps:
            return
        for q in g.maximal_cliques():
            for t in range(1, max_vertices - g.n):
                grow(anchor_star(g, q, t), steps + 1)

    grow(Graph.empty(1), 0)
    return sorted(found.values(), key=lambda g: (g.n, g.sorted_edges()))


def thm14(n: int) -> SuiteResult:
    """Anchored graphs on at most ``n`` vertices are critical and peel back.

    Also every critical T2 graph on ``min(n, 5)`` labeled vertices peels
    into anchored stars.
    """

    def built(g: Graph) -> str | None:
        if not is_g2_critical(g):
            return f"anchored graph {_edges(g)} is not critical"
        steps = decompose_critical(g)
        if steps is None or replay(g, steps).edges != g.edges:
            return f"anchored graph {_edges(g)} does not decompose"
        return None

    res = _sweep("thm14", n, iter(anchored_graphs(n)), built)
    if not res.passed:
        return res
    m = min(n, 5)
    seen = {frozenset(graph(t, Axiom.T2).edges) for t in all_topologies(m)}

    def found(edges: frozenset) -> str | None:
        g = Graph(m, edges)
        if is_connected(g) and is_g2_critical(g):
            steps = decompose_critical(g)
            if steps is None or replay(g, steps).edges != g.edges:
                return f"critical graph {_edges(g)} does not decompose"
        return None

    rest = _sweep("thm14", n, iter(sorted(seen, key=sorted)), found)
    rest.checked += res.checked
    return rest


# universes


def thm15(n: int) -> SuiteResult:
    """Universe cover from a topology validates and rebuilds the same T3' graph."""

    def check(t: FiniteTopology) -> str | None:
        g, uc = universe_cover_from_topology(t)
        bad = cover_violation(g, uc)
        if bad:
            return f"{t}: {bad[1]}"
        try:
            back = graph(topology_from_universe_cover(g, uc), Axiom.T3Prime)
        except SeptopError as e:
            return f"{t}: {e}"
        if back.edges != g.edges:
            return f"{t}: rebuilt {_edges(back)} vs {_edges(g)}"
        return None

    return _sweep("thm15", n, all_topologies(n), check)


def chi3(n: int) -> SuiteResult:
    """Connected T3', T3'', T4 graphs on three or more vertices are not bipartite."""

    def check(t: FiniteTopology) -> str | None:
        for a in HEIGHT3_AXIOMS:
            g = graph(t, a)
            if g.n >= 3 and is_connected(g) and chromatic_number(g) < 3:
                return f"{t}: connected G_{a.slug} has chromatic number {chromatic_number(g)}"
        return None

    res = _sweep("chi3", n, all_topologies(n), check)
    if n >= 3:
        g = graph(discrete(n), Axiom.T4)
        res.notes.append(
            f"discrepancy: the discrete topology on {n} points gives the edgeless G_t4 "
            f"with chromatic number {chromatic_number(g)}; the bound needs connectivity"
        )
    return res


# incidence


def incidence_graphs() -> dict[str, Graph]:
    return {
        "P3": Graph.path(3),
        "C4": Graph.cycle(4),
        "C5": Graph.cycle(5),
        "K4": Graph.complete(4),
    }


def incidence(n: int = 0) -> SuiteResult:
    """T2 graph of the incidence topology restores H and subdivides each edge."""

    def check(item: tuple[str, Graph]) -> str | None:
        name, h = item
        t, kinds = incidence_topology(h)
        g = graph(t, Axiom.T2)
        core, _ = g.induced(range(h.n))
        if core.edges != h.edges:
            return f"{name}: vertex-points induce {_edges(core)}"
        for p, (kind, e) in enumerate(kinds):
            if kind == "e" and g.adj[p] != bits.mask(e):
                return f"{name}: edge-point {t.labels[p]} has neighbors {bits.to_list(g.adj[p])}"
        return None

    return _sweep("incidence", n, iter(incidence_graphs().items()), check)


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "lemma31": lemma31,
    "monotone": monotone,
    "normalize": normalize,
    "thm13": thm13,
    "thm51": thm51,
    "thm52": thm52,
    "thm14": thm14,
    "thm15": thm15,
    "chi3": chi3,
    "incidence": incidence,
    "enumeration": enumeration,
}


def run_suite(name: str, n: int) -> SuiteResult:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](n)
