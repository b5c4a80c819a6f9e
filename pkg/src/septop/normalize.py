"""Graph-preserving rewrites of a topology.

Each transform edits the open-set family as the corresponding existence
argument does and regenerates minimal sets from the edited family.
"""

from __future__ import annotations

from .errors import AxiomOutOfRange
from .separation import Axiom
from .topology import FiniteTopology, first_chain, from_open_sets, open_sets


def _equal_pair(t: FiniteTopology) -> tuple[int, int] | None:
    for x in range(t.n):
        for y in range(x + 1, t.n):
            if t.mins[x] == t.mins[y]:
                return x, y
    return None


def distinguish_minimal_sets(t: FiniteTopology) -> FiniteTopology:
    """Make all minimal sets distinct by adjoining ``m(x) - {y}`` for equal pairs.

    Preserves ``G_i`` for every axiom except T0.
    """
    while (pair := _equal_pair(t)) is not None:
        x, y = pair
        family = open_sets(t) + [t.mins[x] & ~(1 << y)]
        t = from_open_sets(t.n, family, t.labels)
    return t


def reduce_height_2(t: FiniteTopology) -> FiniteTopology:
    """Break every 3-chain ``(v1, v2, v3)`` by dropping ``v2`` from opens containing ``v3``.

    The result has height at most 2 and the same ``G_2``. Minimal sets are
    made distinct before each step; otherwise ``v2`` may lose every open set
    but the ground set and gain edges.
    """
    while first_chain(t, 3) is not None:
        t = distinguish_minimal_sets(t)
        chain = first_chain(t, 3)
        if chain is None:
            break
        _, v2, v3 = chain
        family = [u & ~(1 << v2) if u >> v3 & 1 else u for u in open_sets(t)]
        t = from_open_sets(t.n, family, t.labels)
    return t


_HEIGHT3_AXIOMS = (Axiom.T3Prime, Axiom.T3DoublePrime, Axiom.T4)


def reduce_height_3(t: FiniteTopology, a: Axiom) -> FiniteTopology:
    """Break every 4-chain by dropping ``v2`` from opens holding ``v3`` but not ``v4``.

    Valid for the T3', T3'' and T4 graphs; the result has height at most 3.
    Minimal sets are made distinct before each step: when ``m(v3) == m(v4)``
    no open set separates them and the edit would change nothing.
    """
    if a not in _HEIGHT3_AXIOMS:
        raise AxiomOutOfRange(f"height-3 reduction preserves only t3p, t3pp, t4 (got {a.slug})")
    while first_chain(t, 4) is not None:
        t = distinguish_minimal_sets(t)
        chain = first_chain(t, 4)
        if chain is None:
            break
        _, v2, v3, v4 = chain
        family = [
            u & ~(1 << v2) if u >> v3 & 1 and not u >> v4 & 1 else u for u in open_sets(t)
        ]
        t = from_open_sets(t.n, family, t.labels)
    return t
