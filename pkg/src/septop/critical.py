"""Anchored stars and edge-minimal connected members of the T2 graph class.

A connected graph is critical when it is edge-simplicial but deleting any
nonempty set of its edges disconnects it or destroys that property.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bits
from .covers import covered_by_simplicial, is_edge_simplicial
from .errors import Disconnected, NotMaximalClique, TooLarge
from .graph import Graph
from .oracle import is_connected

CRITICAL_EDGE_LIMIT = 20


@dataclass(frozen=True)
class AnchorStep:
    """New vertex ``center`` joined to ``clique`` plus pendant ``leaves``."""

    center: int
    leaves: tuple[int, ...]
    clique: tuple[int, ...]


def anchor_star(g: Graph, clique: int, t: int) -> Graph:
    """Add a center joined to the maximal clique ``clique`` and ``t`` leaves on the center."""
    if t < 1:
        raise ValueError(f"a star needs at least one leaf (t={t})")
    if not g.is_maximal_clique(clique):
        names = ",".join(g.labels[v] for v in bits.members(clique))
        raise NotMaximalClique(f"{{{names}}} is not a maximal clique")
    x = g.n
    edges = set(g.edges)
    edges.update((v, x) for v in bits.members(clique))
    edges.update((x, x + 1 + i) for i in range(t))
    labels = list(g.labels) + [str(i) for i in range(g.n, g.n + 1 + t)]
    return Graph.from_edges(g.n + 1 + t, edges, labels)


def _connected_adj(adj: list[int], n: int) -> bool:
    seen = frontier = 1
    while frontier:
        nxt = 0
        for u in bits.members(frontier):
            nxt |= adj[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == bits.full(n)


def is_g2_critical(g: Graph) -> bool:
    """Exhaustive check over every nonempty edge set that could be removed."""
    if not is_connected(g):
        raise Disconnected("criticality is defined for connected graphs")
    if g.m > CRITICAL_EDGE_LIMIT:
        raise TooLarge(f"{g.m} edges exceeds the {CRITICAL_EDGE_LIMIT}-edge sweep limit")
    if not is_edge_simplicial(g):
        return False
    edges = g.sorted_edges()
    m = len(edges)
    # keep = edges surviving the removal; a connected survivor needs n - 1 edges
    for keep in range(1 << m):
        if keep == (1 << m) - 1 or bits.popcount(keep) < g.n - 1:
            continue
        adj = [0] * g.n
        for i in bits.members(keep):
            u, v = edges[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if _connected_adj(adj, g.n) and covered_by_simplicial(adj):
            return False
    return True


def decompose_critical(g: Graph) -> list[AnchorStep] | None:
    """Peel anchored stars off ``g`` until one vertex remains.

    Returns the steps in build order (replaying them from the remaining
    vertex rebuilds ``g``), or None when no peeling reaches a single vertex.
    ``K_1`` and ``K_2`` give an empty list.
    """
    if g.n <= 1 or (g.n == 2 and g.m == 1):
        return []
    if not is_connected(g):
        return None

    def deg(v: int, alive: int) -> int:
        return bits.popcount(g.adj[v] & alive)

    def connected(alive: int) -> bool:
        start = alive & -alive
        seen = frontier = start
        while frontier:
            nxt = 0
            for u in bits.members(frontier):
                nxt |= g.adj[u]
            frontier = nxt & alive & ~seen
            seen |= frontier
        return seen == alive

    def is_max_clique(q: int, alive: int) -> bool:
        if not q or not g.is_clique(q):
            return False
        common = alive & ~q
        for v in bits.members(q):
            common &= g.adj[v]
        return common == 0

    def peel(alive: int) -> list[AnchorStep] | None:
        if bits.popcount(alive) == 1:
            return []
        for x in bits.members(alive):
            nbrs = g.adj[x] & alive
            pendant = bits.mask(y for y in bits.members(nbrs) if deg(y, alive) == 1)
            options = []
            if pendant and nbrs & ~pendant:
                options.append((pendant, nbrs & ~pendant))
            if bits.popcount(pendant) >= 2 and nbrs == pendant and alive == nbrs | 1 << x:
                low = pendant & -pendant
                options.append((pendant & ~low, low))
            for leaves, clique in options:
                rest = alive & ~leaves & ~(1 << x)
                if not connected(rest) or not is_max_clique(clique, rest):
                    continue
                below = peel(rest)
                if below is not None:
                    step = AnchorStep(x, tuple(bits.members(leaves)), tuple(bits.members(clique)))
                    return below + [step]
        return None

    return peel(bits.full(g.n))


def replay(g: Graph, steps: list[AnchorStep]) -> Graph:
    """Rebuild the graph that ``steps`` describe, on the vertex ids and labels of ``g``."""
    edges = set()
    for s in steps:
        edges.update((s.center, v) for v in s.clique)
        edges.update((s.center, y) for y in s.leaves)
    if not steps and g.n == 2:
        edges = set(g.edges)
    return Graph.from_edges(g.n, edges, g.labels)
