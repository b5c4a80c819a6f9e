"""Universes (sun, planets, moons) and universe edge covers for the T3' graph class."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import bits
from .errors import InvalidUniverseCover, OverlappingParts
from .graph import Graph
from .normalize import distinguish_minimal_sets, reduce_height_3
from .separation import Axiom, graph
from .topology import FiniteTopology, from_open_sets, height


@dataclass(frozen=True)
class Universe:
    sun: int
    planets: int
    moons: int

    @property
    def vertices(self) -> int:
        return 1 << self.sun | self.planets | self.moons


@dataclass(frozen=True)
class UniverseCover:
    universes: tuple[Universe, ...]

    @property
    def suns(self) -> int:
        return bits.mask(u.sun for u in self.universes)

    @property
    def planets(self) -> int:
        out = 0
        for u in self.universes:
            out |= u.planets
        return out


def universe_violation(g: Graph, u: Universe) -> str | None:
    """First failed universe condition on the subgraph induced by ``u``, or None."""
    s = 1 << u.sun
    if s & (u.planets | u.moons) or u.planets & u.moons:
        raise OverlappingParts("sun, planets and moons must be pairwise disjoint")
    if not bits.is_subset(u.vertices, bits.full(g.n)):
        raise OverlappingParts("universe has vertices outside the graph")
    if not bits.is_subset(u.planets | u.moons, g.adj[u.sun]):
        return "sun is not adjacent to every planet and moon"
    if not g.is_clique(u.planets):
        return "planets do not form a clique"
    for v in bits.members(u.moons):
        if not g.adj[v] & u.planets:
            return f"moon {g.labels[v]} has no planet neighbor"
    for x, y in combinations(bits.members(u.moons), 2):
        shared = g.adj[x] & g.adj[y] & u.planets
        if g.has_edge(x, y) != bool(shared):
            return f"moons {g.labels[x]} and {g.labels[y]}: adjacency differs from sharing a planet"
    return None


def is_universe(g: Graph, u: Universe) -> bool:
    """Check sun universality, planet clique, moon anchoring and moon adjacency."""
    return universe_violation(g, u) is None


def universe_edges(g: Graph, u: Universe) -> set[tuple[int, int]]:
    vs = u.vertices
    return {(a, b) for a, b in g.edges if vs >> a & 1 and vs >> b & 1}


def cover_violation(g: Graph, uc: UniverseCover) -> tuple[str, str] | None:
    """``(condition, message)`` for the first failed requirement, or None.

    Conditions: ``universe`` (a member is not a universe), ``partition``
    (suns and planets do not partition the vertices), ``suns`` (two suns
    sharing a planet neighbor are not adjacent), ``coverage``.
    """
    for i, u in enumerate(uc.universes):
        why = universe_violation(g, u)
        if why:
            return "universe", f"universe {i}: {why}"
    suns = [u.sun for u in uc.universes]
    if len(set(suns)) != len(suns):
        return "partition", "a vertex is the sun of two universes"
    s, p = uc.suns, uc.planets
    if s & p or s | p != bits.full(g.n):
        return "partition", "suns and planets do not partition the vertex set"
    for a, b in combinations(suns, 2):
        if g.adj[a] & g.adj[b] & p and not g.has_edge(a, b):
            return "suns", f"suns {g.labels[a]} and {g.labels[b]} share a planet neighbor but are not adjacent"
    covered: set[tuple[int, int]] = set()
    for u in uc.universes:
        covered |= universe_edges(g, u)
    missing = sorted(g.edges - covered)
    if missing:
        a, b = missing[0]
        return "coverage", f"edge {g.labels[a]}{g.labels[b]} is in no universe"
    return None


def normalize_for_t3(t: FiniteTopology) -> FiniteTopology:
    """Distinct minimal sets and height at most 3, with the same T3' graph."""
    while len(set(t.mins)) != t.n or height(t) > 3:
        t = reduce_height_3(distinguish_minimal_sets(t), Axiom.T3Prime)
    return t


def universe_cover_from_topology(t: FiniteTopology) -> tuple[Graph, UniverseCover]:
    """``G_3'(t)`` with one universe per bottom-layer point.

    Point ``v`` with ``m(v) = {v}`` is a sun; its planets are the points
    whose minimal set contains ``v`` and its moons are its other neighbors.
    """
    g = graph(t, Axiom.T3Prime)
    flat = normalize_for_t3(t)
    universes = []
    for v in range(flat.n):
        if flat.mins[v] != 1 << v:
            continue
        planets = bits.mask(u for u in range(flat.n) if u != v and flat.mins[u] >> v & 1)
        universes.append(Universe(v, planets, g.adj[v] & ~planets))
    uc = UniverseCover(tuple(universes))
    bad = cover_violation(g, uc)
    if bad:
        raise AssertionError(f"forward universe construction failed: {bad[1]}")
    return g, uc


def _candidate_families(g: Graph, uc: UniverseCover) -> list[list[int]]:
    suns = uc.suns
    owners: dict[int, list[Universe]] = {}
    for u in uc.universes:
        for p in bits.members(u.planets):
            owners.setdefault(p, []).append(u)
    layered, flat = [], []
    for v in range(g.n):
        if suns >> v & 1:
            layered.append(1 << v)
            flat.append(1 << v)
            continue
        mine = owners[v]
        base = 1 << v | bits.mask(u.sun for u in mine)
        moons = 0
        for u in mine:
            moons |= g.adj[v] & u.moons
        # planets whose moon neighbors are all suns stay in the middle layer
        layered.append(base if bits.is_subset(moons, suns) else base | moons)
        flat.append(base | moons)
    return [layered, flat]


def topology_from_universe_cover(g: Graph, uc: UniverseCover) -> FiniteTopology:
    """Topology whose T3' graph is ``g``, built in three layers.

    Suns form the bottom layer with singleton minimal sets. A planet's
    minimal set is itself plus the suns of its universes; planets with a
    moon neighbor that is not a sun also take in their moon neighbors. If
    that misses ``g``, every planet takes in its moon neighbors.

    Some valid covers describe graphs outside the T3' class (the smallest
    is the triangle 012 with a pendant 3 on 0 and suns 0 and 1), so a
    mismatch raises ``InvalidUniverseCover`` with condition ``realization``.
    """
    bad = cover_violation(g, uc)
    if bad:
        raise InvalidUniverseCover(bad[1], bad[0])
    for family in _candidate_families(g, uc):
        t = from_open_sets(g.n, family, g.labels)
        if graph(t, Axiom.T3Prime).edges == g.edges:
            return t
    raise InvalidUniverseCover("the rebuilt topology has a different T3' graph", "realization")
