"""Exhaustive generators for labeled topologies and posets on small ground sets."""

from __future__ import annotations

from collections.abc import Iterator

from . import bits
from .errors import TooLarge
from .graph import Graph
from .poset import Poset
from .separation import Axiom, graph
from .topology import FiniteTopology

ENUMERATION_LIMIT = 5


def _preorders(n: int, antisymmetric: bool) -> Iterator[tuple[int, ...]]:
    """Reflexive transitive relations as per-point down-closed masks, lexicographic.

    Entry ``x`` holds the points related below ``x`` (its minimal set when
    read as a topology). Each pair is checked once both ends are assigned.
    """
    rows = [0] * n

    def place(x: int) -> Iterator[tuple[int, ...]]:
        if x == n:
            yield tuple(rows)
            return
        own = 1 << x
        for rest in range(1 << (n - 1)):
            # spread the n-1 free bits around position x
            low = rest & (own - 1)
            row = low | own | (rest & ~(own - 1)) << 1
            ok = True
            for y in range(x):
                ry = rows[y]
                if row >> y & 1 and not bits.is_subset(ry, row):
                    ok = False
                elif ry >> x & 1 and not bits.is_subset(row, ry):
                    ok = False
                elif antisymmetric and row >> y & 1 and ry >> x & 1:
                    ok = False
                if not ok:
                    break
            if ok:
                rows[x] = row
                yield from place(x + 1)

    yield from place(0)


def all_topologies(n: int) -> Iterator[FiniteTopology]:
    """Every labeled topology on ``n`` points exactly once, in a fixed order."""
    if n > ENUMERATION_LIMIT:
        raise TooLarge(f"topology enumeration is limited to n <= {ENUMERATION_LIMIT}")
    for rows in _preorders(n, antisymmetric=False):
        yield FiniteTopology(n, rows)


def all_posets(n: int) -> Iterator[Poset]:
    """Every labeled poset on ``n`` elements exactly once."""
    if n > ENUMERATION_LIMIT:
        raise TooLarge(f"poset enumeration is limited to n <= {ENUMERATION_LIMIT}")
    for rows in _preorders(n, antisymmetric=True):
        yield Poset(n, rows)


FAMILY_FILTER_LIMIT = 4


def topology_families(n: int) -> list[int]:
    """Brute-force filter over all families of subsets of an ``n``-set.

    A family is a ``2**n``-bit integer (bit ``s`` set when subset ``s`` is a
    member). Keeps those holding the empty and full sets and closed under
    pairwise union and intersection. Independent of the preorder route.
    """
    if n > FAMILY_FILTER_LIMIT:
        raise TooLarge(f"the family filter is limited to n <= {FAMILY_FILTER_LIMIT}")
    k = 1 << n
    full = k - 1
    required = 1 | 1 << full
    free = [s for s in range(1, full)]
    out = []
    for choice in range(1 << len(free)):
        fam = required
        for i, s in enumerate(free):
            if choice >> i & 1:
                fam |= 1 << s
        members = [s for s in range(k) if fam >> s & 1]
        if all(
            fam >> (a | b) & 1 and fam >> (a & b) & 1
            for i, a in enumerate(members)
            for b in members[i + 1 :]
        ):
            out.append(fam)
    return out


def family_min_sets(n: int, fam: int) -> tuple[int, ...]:
    """Minimal set of each point for a family produced by ``topology_families``."""
    full = (1 << n) - 1
    members = [s for s in range(1 << n) if fam >> s & 1]
    out = []
    for x in range(n):
        mx = full
        for s in members:
            if s >> x & 1:
                mx &= s
        out.append(mx)
    return tuple(out)


MEMBERSHIP_LIMIT = 5


def membership(g: Graph, a: Axiom) -> FiniteTopology | None:
    """A topology whose ``a``-graph equals ``g`` as a labeled graph, or None."""
    if g.n > MEMBERSHIP_LIMIT:
        raise TooLarge(f"membership search is limited to {MEMBERSHIP_LIMIT} vertices")
    for t in all_topologies(g.n):
        if graph(t, a).edges == g.edges:
            return FiniteTopology(t.n, t.mins, g.labels)
    return None
