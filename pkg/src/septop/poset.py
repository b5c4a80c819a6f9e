"""Posets, the five graphs built from them, and the bridge to finite topologies."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import combinations

from . import bits
from .errors import InvalidPoset, NonDistinctMinimalSets, TooLarge
from .graph import Graph
from .topology import FiniteTopology


@dataclass(frozen=True)
class Poset:
    """Partial order on ``0..n-1``; ``up[x]`` is the bitmask of elements ``>= x``."""

    n: int
    up: tuple[int, ...]
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.n > bits.MAX_POINTS:
            raise TooLarge(f"{self.n} elements exceeds the {bits.MAX_POINTS}-element cap")
        if len(self.up) != self.n:
            raise InvalidPoset(f"{len(self.up)} up-sets for {self.n} elements")
        object.__setattr__(self, "up", tuple(self.up))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.n)))
        elif len(self.labels) != self.n:
            raise InvalidPoset(f"{len(self.labels)} labels for {self.n} elements")
        else:
            object.__setattr__(self, "labels", tuple(self.labels))
        for x, ux in enumerate(self.up):
            if not ux >> x & 1:
                raise InvalidPoset(f"not reflexive at {x}")
            for y in bits.members(ux):
                if not bits.is_subset(self.up[y], ux):
                    raise InvalidPoset(f"not transitive: {x} <= {y} but up({y}) not inside up({x})")
                if y != x and self.up[y] >> x & 1:
                    raise InvalidPoset(f"not antisymmetric: {x} <= {y} <= {x}")

    @classmethod
    def from_relations(
        cls, n: int, pairs: Iterable[tuple[int, int]], labels: Iterable[str] | None = None
    ) -> Poset:
        """Reflexive-transitive closure of ``a <= b`` pairs; raises on cycles."""
        up = [1 << x for x in range(n)]
        for a, b in pairs:
            up[a] |= 1 << b
        changed = True
        while changed:
            changed = False
            for x in range(n):
                grown = up[x]
                for y in bits.members(up[x]):
                    grown |= up[y]
                if grown != up[x]:
                    up[x] = grown
                    changed = True
        return cls(n, tuple(up), tuple(labels or ()))

    @classmethod
    def chain(cls, n: int) -> Poset:
        return cls.from_relations(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def antichain(cls, n: int) -> Poset:
        return cls(n, tuple(1 << x for x in range(n)))

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def down(self, x: int) -> int:
        return bits.mask(y for y in range(self.n) if self.up[y] >> x & 1)

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(a, b)`` with ``a < b`` and nothing strictly between."""
        out = []
        for a in range(self.n):
            above = self.up[a] & ~(1 << a)
            for b in bits.members(above):
                between = above & ~(1 << b) & self.down(b)
                if not between:
                    out.append((a, b))
        return out


def _pairs(p: Poset, adjacent) -> Graph:
    edges = [(x, y) for x, y in combinations(range(p.n), 2) if adjacent(x, y)]
    return Graph.from_edges(p.n, edges, p.labels)


def comparability_graph(p: Poset) -> Graph:
    return _pairs(p, lambda x, y: p.leq(x, y) or p.leq(y, x))


def upper_bound_graph(p: Poset) -> Graph:
    return _pairs(p, lambda x, y: p.up[x] & p.up[y] != 0)


def _lower_reaches(p: Poset, x: int, y: int) -> bool:
    """Some ``a <= x`` shares an upper bound with ``y``."""
    return any(p.up[a] & p.up[y] for a in bits.members(p.down(x)))


def half_closed_ub_graph(p: Poset) -> Graph:
    return _pairs(p, lambda x, y: _lower_reaches(p, x, y) and _lower_reaches(p, y, x))


def fully_closed_ub_graph(p: Poset) -> Graph:
    return _pairs(p, lambda x, y: _lower_reaches(p, x, y) or _lower_reaches(p, y, x))


def extended_closed_ub_graph(p: Poset) -> Graph:
    def adjacent(x: int, y: int) -> bool:
        dy = list(bits.members(p.down(y)))
        return any(p.up[a] & p.up[b] for a in bits.members(p.down(x)) for b in dy)

    return _pairs(p, adjacent)


POSET_GRAPHS = (
    comparability_graph,
    upper_bound_graph,
    half_closed_ub_graph,
    fully_closed_ub_graph,
    extended_closed_ub_graph,
)


def topology_from_poset(p: Poset) -> FiniteTopology:
    """Topology whose minimal set at ``x`` is the up-set of ``x``.

    ``x <= y`` exactly when ``m(y) <= m(x)``, so common upper bounds become
    intersecting minimal sets and the T2 graph is the upper bound graph.
    """
    return FiniteTopology(p.n, p.up, p.labels)


def poset_from_topology(t: FiniteTopology) -> Poset:
    """Order ``x <= y`` iff ``m(y) <= m(x)``; minimal sets must be distinct."""
    if len(set(t.mins)) != t.n:
        x, y = next((x, y) for x, y in combinations(range(t.n), 2) if t.mins[x] == t.mins[y])
        raise NonDistinctMinimalSets(
            f"points {t.labels[x]} and {t.labels[y]} share a minimal set; "
            "run distinguish_minimal_sets (CLI: normalize --distinct) first"
        )
    up = tuple(bits.mask(y for y in range(t.n) if bits.is_subset(t.mins[y], t.mins[x])) for x in range(t.n))
    return Poset(t.n, up, t.labels)


COMPARABILITY_LIMIT = 10


def is_comparability(g: Graph) -> dict[tuple[int, int], bool] | None:
    """Find a transitive orientation of ``g`` by backtracking with forcing.

    Returns a map from each sorted edge ``(u, v)`` to True when oriented
    ``u -> v`` (False for ``v -> u``), or None when no orientation exists.
    """
    if g.n > COMPARABILITY_LIMIT:
        raise TooLarge(f"comparability search is limited to {COMPARABILITY_LIMIT} vertices")
    adj = g.adj
    edges = g.sorted_edges()
    # arcs[u] holds every v with u -> v
    arcs = [0] * g.n

    def oriented(u: int, v: int) -> bool:
        return bool(arcs[u] >> v & 1 or arcs[v] >> u & 1)

    def assign(u: int, v: int, trail: list[tuple[int, int]]) -> bool:
        queue = [(u, v)]
        while queue:
            a, b = queue.pop()
            if arcs[b] >> a & 1:
                return False
            if arcs[a] >> b & 1:
                continue
            arcs[a] |= 1 << b
            trail.append((a, b))
            for c in range(g.n):
                if c in (a, b):
                    continue
                # a -> b -> c forces a -> c; c -> a -> b forces c -> b
                if arcs[b] >> c & 1:
                    if not adj[a] >> c & 1:
                        return False
                    queue.append((a, c))
                if arcs[c] >> a & 1:
                    if not adj[c] >> b & 1:
                        return False
                    queue.append((c, b))
                # an edge at one end only is forced toward the shared endpoint
                if adj[b] >> c & 1 and not adj[a] >> c & 1:
                    queue.append((c, b))
                if adj[a] >> c & 1 and not adj[b] >> c & 1:
                    queue.append((a, c))
        return True

    def undo(trail: list[tuple[int, int]]) -> None:
        for a, b in trail:
            arcs[a] &= ~(1 << b)

    def search(i: int) -> bool:
        while i < len(edges) and oriented(*edges[i]):
            i += 1
        if i == len(edges):
            return True
        u, v = edges[i]
        for a, b in ((u, v), (v, u)):
            trail: list[tuple[int, int]] = []
            if assign(a, b, trail) and search(i + 1):
                return True
            undo(trail)
        return False

    if not search(0):
        return None
    orientation = {(u, v): bool(arcs[u] >> v & 1) for u, v in edges}
    if not is_transitive_orientation(g, orientation):
        raise AssertionError("forcing search produced a non-transitive orientation")
    return orientation


def is_transitive_orientation(g: Graph, orientation: dict[tuple[int, int], bool]) -> bool:
    """Direct triple scan: ``a -> b -> c`` must come with ``a -> c``."""
    out = [0] * g.n
    for (u, v), forward in orientation.items():
        if forward:
            out[u] |= 1 << v
        else:
            out[v] |= 1 << u
    for a in range(g.n):
        for b in bits.members(out[a]):
            if not bits.is_subset(out[b] & ~(1 << a), out[a]):
                return False
    return True
