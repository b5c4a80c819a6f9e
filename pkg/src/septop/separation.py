"""Separation of points in a finite topology and the six graphs it induces.

Two routes decide whether points are separated: ``separated`` quantifies
over open and closed sets directly, and ``adjacent`` uses minimal-set
formulas. They must be exact complements; ``graph`` uses the fast one.
"""

from __future__ import annotations

import enum
from itertools import combinations

from . import bits
from .errors import ChainViolation, SamePoint
from .graph import Graph
from .topology import FiniteTopology, open_sets


class Axiom(enum.IntEnum):
    T0 = 0
    T1 = 1
    T2 = 2
    T3Prime = 3
    T3DoublePrime = 4
    T4 = 5

    @property
    def slug(self) -> str:
        return _SLUGS[self]

    @classmethod
    def parse(cls, text: str) -> Axiom:
        key = text.strip().lower()
        for a, s in _SLUGS.items():
            if key in (s, a.name.lower()):
                return a
        raise ValueError(f"unknown axiom {text!r}; expected one of {', '.join(_SLUGS.values())}")


_SLUGS = {
    Axiom.T0: "t0",
    Axiom.T1: "t1",
    Axiom.T2: "t2",
    Axiom.T3Prime: "t3p",
    Axiom.T3DoublePrime: "t3pp",
    Axiom.T4: "t4",
}

AXIOMS = tuple(Axiom)


class _Family:
    """Open and closed sets of a topology, materialized once per query."""

    def __init__(self, t: FiniteTopology):
        self.opens = open_sets(t)
        ground = t.ground
        self.closeds = [ground & ~u for u in self.opens]

    def opens_with(self, x: int) -> list[int]:
        return [u for u in self.opens if u >> x & 1]

    def regular_nbhds(self, x: int) -> list[int]:
        """Open sets ``U`` for which some closed ``J`` has ``x in J <= U``."""
        out = []
        for j in self.closeds:
            if not j >> x & 1:
                continue
            for u in self.opens:
                if bits.is_subset(j, u):
                    out.append(u)
        return out


def _disjoint_pair(left: list[int], right: list[int]) -> bool:
    return any(a & b == 0 for a in left for b in right)


def _one_sided_regular(fam: _Family, x: int, y: int) -> bool:
    # closed J containing x inside open U_J, open U_y containing y, U_J and U_y disjoint
    return _disjoint_pair(fam.regular_nbhds(x), fam.opens_with(y))


def separated(t: FiniteTopology, x: int, y: int, a: Axiom) -> bool:
    """Decide separation by quantifying over the open and closed sets of ``t``.

    Slow; meant as the reference route at small sizes.
    """
    if x == y:
        raise SamePoint(f"separation of point {x} from itself is undefined")
    fam = _Family(t)
    if a is Axiom.T0:
        return any((u >> x & 1) != (u >> y & 1) for u in fam.opens)
    if a is Axiom.T1:
        return any(u >> x & 1 and not u >> y & 1 for u in fam.opens) and any(
            u >> y & 1 and not u >> x & 1 for u in fam.opens
        )
    if a is Axiom.T2:
        return _disjoint_pair(fam.opens_with(x), fam.opens_with(y))
    if a is Axiom.T3Prime:
        return _one_sided_regular(fam, x, y) or _one_sided_regular(fam, y, x)
    if a is Axiom.T3DoublePrime:
        return _one_sided_regular(fam, x, y) and _one_sided_regular(fam, y, x)
    return _disjoint_pair(fam.regular_nbhds(x), fam.regular_nbhds(y))


def adjacent(t: FiniteTopology, x: int, y: int, a: Axiom) -> bool:
    """Decide adjacency from minimal sets and minimal sets of ``ell``."""
    if x == y:
        raise SamePoint(f"adjacency of point {x} with itself is undefined")
    mx, my = t.mins[x], t.mins[y]
    if a is Axiom.T0:
        return mx == my
    if a is Axiom.T1:
        return bits.is_subset(mx, my) or bits.is_subset(my, mx)
    if a is Axiom.T2:
        return mx & my != 0
    lx, ly = t.ell_mins[x], t.ell_mins[y]
    if a is Axiom.T3Prime:
        return mx & ly != 0 and lx & my != 0
    if a is Axiom.T3DoublePrime:
        return mx & ly != 0 or lx & my != 0
    return lx & ly != 0


def graph(t: FiniteTopology, a: Axiom) -> Graph:
    """The graph on the points of ``t`` whose non-edges are the separated pairs."""
    edges = [(x, y) for x, y in combinations(range(t.n), 2) if adjacent(t, x, y, a)]
    return Graph.from_edges(t.n, edges, t.labels)


def graph_chain(t: FiniteTopology) -> list[Graph]:
    """All six graphs in axiom order; their edge sets must be nested."""
    gs = [graph(t, a) for a in AXIOMS]
    for lo, hi, g, h in zip(AXIOMS, AXIOMS[1:], gs, gs[1:]):
        if not g.edges <= h.edges:
            extra = sorted(g.edges - h.edges)
            raise ChainViolation(f"edges {extra} of G_{lo.slug} missing from G_{hi.slug}")
    return gs
