"""Simplicial clique covers, clique cover graphs, and hypergraph line graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import bits
from .errors import InvalidCover
from .graph import Graph, Hypergraph
from .normalize import distinguish_minimal_sets, reduce_height_2
from .separation import Axiom, graph
from .topology import FiniteTopology, height


@dataclass(frozen=True)
class CliqueCover:
    """Cliques as bitmasks; ``witness[i]``, when given, is a simplicial vertex of clique ``i``."""

    cliques: tuple[int, ...]
    witness: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "cliques", tuple(self.cliques))
        if self.witness is not None:
            object.__setattr__(self, "witness", tuple(self.witness))
            if len(self.witness) != len(self.cliques):
                raise InvalidCover(f"{len(self.witness)} witnesses for {len(self.cliques)} cliques")


def simplicial_mask(adj: tuple[int, ...] | list[int]) -> int:
    out = 0
    for v, nv in enumerate(adj):
        if all(bits.is_subset(nv & ~(1 << u), adj[u]) for u in bits.members(nv)):
            out |= 1 << v
    return out


def simplicial_vertices(g: Graph) -> list[int]:
    """Vertices whose closed neighborhood is a clique."""
    return bits.to_list(simplicial_mask(g.adj))


def covered_by_simplicial(adj: tuple[int, ...] | list[int]) -> bool:
    """True when every edge lies in the closed neighborhood of a simplicial vertex."""
    reach = [0] * len(adj)
    for s in bits.members(simplicial_mask(adj)):
        closed = adj[s] | 1 << s
        for u in bits.members(closed):
            reach[u] |= closed
    return all(bits.is_subset(nv, reach[v]) for v, nv in enumerate(adj))


def is_edge_simplicial(g: Graph) -> bool:
    """Whether ``g`` has a clique edge cover in which every clique holds a simplicial vertex.

    Any such clique sits inside the closed neighborhood of its simplicial
    vertex, so it is enough to test that those neighborhoods cover every edge.
    """
    return covered_by_simplicial(g.adj)


def simplicial_neighbor_condition(g: Graph) -> bool:
    """Every vertex is simplicial or adjacent to a simplicial vertex.

    Necessary for ``is_edge_simplicial`` but not sufficient: the path on four
    vertices passes this test yet its middle edge lies in no clique with a
    simplicial vertex.
    """
    simp = simplicial_mask(g.adj)
    return all(simp >> v & 1 or g.adj[v] & simp for v in range(g.n))


def greedy_simplicial_cover(g: Graph) -> CliqueCover | None:
    """Closed neighborhoods of simplicial vertices, one per distinct neighborhood.

    Returns None when they fail to cover every edge. Isolated vertices are
    skipped since their neighborhoods cover nothing.
    """
    if not is_edge_simplicial(g):
        return None
    seen: dict[int, int] = {}
    for s in simplicial_vertices(g):
        closed = g.closed_neighbors(s)
        if g.adj[s] and closed not in seen:
            seen[closed] = s
    return CliqueCover(tuple(seen), tuple(seen.values()))


def validate_cover(g: Graph, c: CliqueCover, *, need_witness: bool = False) -> None:
    """Raise ``InvalidCover`` unless ``c`` is a clique edge cover of ``g`` with valid witnesses."""
    covered: set[tuple[int, int]] = set()
    for i, q in enumerate(c.cliques):
        if not q or not bits.is_subset(q, bits.full(g.n)):
            raise InvalidCover(f"clique {i} is empty or has vertices outside the graph")
        if not g.is_clique(q):
            names = ",".join(g.labels[v] for v in bits.members(q))
            raise InvalidCover(f"clique {i} {{{names}}} is not a clique")
        covered.update(combinations(bits.members(q), 2))
    missing = sorted(g.edges - covered)
    if missing:
        u, v = missing[0]
        raise InvalidCover(f"edge {g.labels[u]}{g.labels[v]} is not covered")
    if c.witness is None:
        if need_witness:
            raise InvalidCover("cover has no simplicial witnesses")
        return
    simp = simplicial_mask(g.adj)
    for i, (q, w) in enumerate(zip(c.cliques, c.witness)):
        if not q >> w & 1:
            raise InvalidCover(f"witness {g.labels[w]} is not in clique {i}")
        if not simp >> w & 1:
            raise InvalidCover(f"witness {g.labels[w]} of clique {i} is not simplicial")


def normalize_for_t2(t: FiniteTopology) -> FiniteTopology:
    """Distinct minimal sets and height at most 2, with the same T2 graph."""
    while len(set(t.mins)) != t.n or height(t) > 2:
        t = reduce_height_2(distinguish_minimal_sets(t))
    return t


def layer_one(t: FiniteTopology) -> list[int]:
    """Points whose minimal set is the singleton of themselves."""
    return [x for x in range(t.n) if t.mins[x] == 1 << x]


def cover_from_topology(t: FiniteTopology) -> tuple[Graph, CliqueCover]:
    """``G_2(t)`` with the closed neighborhoods of the bottom layer as a witnessed cover."""
    g = graph(t, Axiom.T2)
    flat = normalize_for_t2(t)
    cliques, witness = [], []
    for v in layer_one(flat):
        if g.adj[v]:
            cliques.append(g.closed_neighbors(v))
            witness.append(v)
    cover = CliqueCover(tuple(cliques), tuple(witness))
    validate_cover(g, cover, need_witness=True)
    return g, cover


def topology_from_cover(g: Graph, c: CliqueCover) -> FiniteTopology:
    """Two-layer topology whose T2 graph is ``g``.

    Witnesses form the bottom layer with singleton minimal sets; every other
    vertex gets itself plus its witness neighbors.
    """
    validate_cover(g, c, need_witness=True)
    ws = list(c.witness or ())
    if len(set(ws)) != len(ws):
        raise InvalidCover("witnesses must be distinct")
    for a, b in combinations(ws, 2):
        if g.has_edge(a, b):
            raise InvalidCover(
                f"witnesses {g.labels[a]} and {g.labels[b]} are adjacent; "
                "they share one closed neighborhood, keep only one"
            )
    bottom = bits.mask(ws)
    mins = tuple(1 << v if bottom >> v & 1 else 1 << v | g.adj[v] & bottom for v in range(g.n))
    return FiniteTopology(g.n, mins, g.labels)


def clique_cover_graph(g: Graph, c: CliqueCover) -> Graph:
    """Intersection graph of the cover's cliques."""
    qs = c.cliques
    edges = [(i, j) for i, j in combinations(range(len(qs)), 2) if qs[i] & qs[j]]
    return Graph.from_edges(len(qs), edges, [f"C{i}" for i in range(len(qs))])


def clique_number(g: Graph) -> int:
    return max((bits.popcount(q) for q in g.maximal_cliques()), default=0)


def hypergraph_from_cover(g: Graph, c: CliqueCover, *, pad: bool = False) -> Hypergraph:
    """Hypergraph on the non-simplicial vertices with one hyperedge per cover clique.

    Its line graph is the clique cover graph. The cover must consist of
    maximal cliques, each holding a simplicial vertex. With ``pad`` every
    hyperedge is filled to ``omega(g) - 1`` vertices using fresh dummy
    vertices.
    """
    validate_cover(g, c)
    simp = simplicial_mask(g.adj)
    for i, q in enumerate(c.cliques):
        if not g.is_maximal_clique(q):
            raise InvalidCover(f"clique {i} is not maximal")
        if not q & simp:
            raise InvalidCover(f"clique {i} has no simplicial vertex")
    core = [v for v in range(g.n) if not simp >> v & 1]
    index = {v: i for i, v in enumerate(core)}
    labels = [g.labels[v] for v in core]
    edges = [bits.mask(index[v] for v in bits.members(q & ~simp)) for q in c.cliques]
    if pad:
        width = clique_number(g) - 1
        for i, e in enumerate(edges):
            while bits.popcount(e) < width:
                e |= 1 << len(labels)
                labels.append(f"d{len(labels) - len(core)}")
            edges[i] = e
    k = Hypergraph(len(labels), tuple(edges), tuple(labels))
    if k.rank > max(clique_number(g) - 1, 0):
        raise AssertionError("hypergraph rank exceeds clique number minus one")
    return k
