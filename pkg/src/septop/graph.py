"""Simple labeled graphs and hypergraphs over vertices ``0..n-1``."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from . import bits
from .errors import InvalidGraph, TooLarge


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; vertices are ``0..n-1``, ``labels[i]`` names vertex ``i``."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidGraph(f"negative vertex count {self.n}")
        if self.n > bits.MAX_POINTS:
            raise TooLarge(f"{self.n} vertices exceeds the {bits.MAX_POINTS}-vertex cap")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidGraph(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraph(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            norm.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))
        if not self.labels:
            object.__setattr__(self, "labels", _default_labels(self.n))
        elif len(self.labels) != self.n:
            raise InvalidGraph(f"{len(self.labels)} labels for {self.n} vertices")
        else:
            object.__setattr__(self, "labels", tuple(self.labels))

    # constructors

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Iterable[str] | None = None
    ) -> Graph:
        return cls(n, frozenset(_norm_edge(u, v) for u, v in edges), tuple(labels or ()))

    @classmethod
    def from_adjacency(cls, adj: list[int], labels: Iterable[str] | None = None) -> Graph:
        n = len(adj)
        edges = {(u, v) for u in range(n) for v in bits.members(adj[u]) if u < v}
        return cls(n, frozenset(edges), tuple(labels or ()))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> Graph:
        return cls.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))

    # queries

    @cached_property
    def adj(self) -> tuple[int, ...]:
        out = [0] * self.n
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return tuple(out)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def closed_neighbors(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def degree(self, v: int) -> int:
        return bits.popcount(self.adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_clique(self, vs: int) -> bool:
        return all(bits.is_subset(vs & ~(1 << v), self.adj[v]) for v in bits.members(vs))

    def is_maximal_clique(self, vs: int) -> bool:
        if not vs or not self.is_clique(vs):
            return False
        common = bits.full(self.n) & ~vs
        for v in bits.members(vs):
            common &= self.adj[v]
        return common == 0

    def maximal_cliques(self) -> list[int]:
        """All maximal cliques as bitmasks, sorted (Bron-Kerbosch with pivoting)."""
        out: list[int] = []

        def expand(r: int, p: int, x: int) -> None:
            if not p and not x:
                out.append(r)
                return
            pivot = next(bits.members(p | x))
            for v in bits.members(p & ~self.adj[pivot]):
                expand(r | 1 << v, p & self.adj[v], x & self.adj[v])
                p &= ~(1 << v)
                x |= 1 << v

        if self.n:
            expand(0, bits.full(self.n), 0)
        return sorted(out)

    def induced(self, vs: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on ``vs``, relabeled to ``0..k-1``; also returns the old ids."""
        old = tuple(sorted(set(vs)))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph.from_edges(len(old), edges, [self.labels[v] for v in old]), old

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> Graph:
        gone = {_norm_edge(u, v) for u, v in removed}
        return Graph(self.n, self.edges - gone, self.labels)

    def same_edges(self, other: Graph) -> bool:
        return self.n == other.n and self.edges == other.edges

    def __str__(self) -> str:
        es = ", ".join(f"{self.labels[u]}{self.labels[v]}" for u, v in self.sorted_edges())
        return f"Graph(n={self.n}, edges={{{es}}})"


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus a list of hyperedges stored as bitmasks.

    Empty hyperedges are permitted: a cover clique made only of simplicial
    vertices has no non-simplicial members and becomes an isolated vertex of
    the line graph.
    """

    n: int
    hyperedges: tuple[int, ...] = ()
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.n > bits.MAX_POINTS:
            raise TooLarge(f"{self.n} vertices exceeds the {bits.MAX_POINTS}-vertex cap")
        for e in self.hyperedges:
            if not bits.is_subset(e, bits.full(self.n)):
                raise InvalidGraph(f"hyperedge {bits.to_list(e)} not inside 0..{self.n - 1}")
        object.__setattr__(self, "hyperedges", tuple(self.hyperedges))
        if not self.labels:
            object.__setattr__(self, "labels", _default_labels(self.n))
        elif len(self.labels) != self.n:
            raise InvalidGraph(f"{len(self.labels)} labels for {self.n} vertices")

    @property
    def rank(self) -> int:
        return max((bits.popcount(e) for e in self.hyperedges), default=0)


def line_graph(k: Hypergraph) -> Graph:
    """One vertex per hyperedge; two are adjacent when the hyperedges intersect."""
    es = k.hyperedges
    edges = [(i, j) for i, j in combinations(range(len(es)), 2) if es[i] & es[j]]
    return Graph.from_edges(len(es), edges, [f"E{i}" for i in range(len(es))])
