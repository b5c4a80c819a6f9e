"""Finite topologies stored by their minimal open sets.

A finite topology is determined by ``m(x)``, the smallest open set
containing each point ``x``. Every open set is a union of these, so the full
family is only materialized when a caller asks for it.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from . import bits
from .errors import EmptySubspace, InvalidBase, TooLarge
from .graph import Graph


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


@dataclass(frozen=True)
class FiniteTopology:
    """Finite topology on points ``0..n-1``.

    ``mins[x]`` is the bitmask of the minimal open set containing ``x``.
    Construction validates that ``x`` lies in its own minimal set and that
    minimal sets are downward coherent (``y in m(x)`` implies
    ``m(y) <= m(x)``).
    """

    n: int
    mins: tuple[int, ...]
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.n > bits.MAX_POINTS:
            raise TooLarge(f"{self.n} points exceeds the {bits.MAX_POINTS}-point cap")
        if len(self.mins) != self.n:
            raise InvalidBase(f"{len(self.mins)} minimal sets for {self.n} points")
        object.__setattr__(self, "mins", tuple(self.mins))
        if not self.labels:
            object.__setattr__(self, "labels", _default_labels(self.n))
        elif len(self.labels) != self.n:
            raise InvalidBase(f"{len(self.labels)} labels for {self.n} points")
        else:
            object.__setattr__(self, "labels", tuple(self.labels))
        _validate(self.n, self.mins)

    @property
    def ground(self) -> int:
        return bits.full(self.n)

    def m(self, x: int) -> int:
        return self.mins[x]

    @cached_property
    def ells(self) -> tuple[int, ...]:
        return tuple(_ell(self, x) for x in range(self.n))

    @cached_property
    def ell_mins(self) -> tuple[int, ...]:
        """``m(ell(x))`` for every point."""
        return tuple(min_set_of_subset(self, e) for e in self.ells)

    def minimal_base(self) -> list[int]:
        """The distinct minimal sets, sorted."""
        return sorted(set(self.mins))

    def label_set(self, s: int) -> list[str]:
        return [self.labels[i] for i in bits.members(s)]

    def __str__(self) -> str:
        parts = ", ".join(
            f"{self.labels[x]}: {{{','.join(self.label_set(self.mins[x]))}}}" for x in range(self.n)
        )
        return f"FiniteTopology({parts})"


def _validate(n: int, mins: Sequence[int]) -> None:
    ground = bits.full(n)
    for x, mx in enumerate(mins):
        if not bits.is_subset(mx, ground):
            raise InvalidBase(f"m({x}) has points outside 0..{n - 1}", (x, x))
        if not mx >> x & 1:
            raise InvalidBase(f"point {x} is not in its own minimal set", (x, x))
    for x, mx in enumerate(mins):
        for y in bits.members(mx):
            if not bits.is_subset(mins[y], mx):
                raise InvalidBase(f"{y} is in m({x}) but m({y}) is not contained in m({x})", (x, y))
    # closure under intersection: m(x) & m(y) must itself be a union of minimal sets
    for x in range(n):
        for y in range(x + 1, n):
            meet = mins[x] & mins[y]
            if min_union(mins, meet) != meet:
                raise InvalidBase(f"m({x}) & m({y}) is not open", (x, y))


def min_union(mins: Sequence[int], s: int) -> int:
    out = 0
    for a in bits.members(s):
        out |= mins[a]
    return out


# constructors


def from_minimal_base(
    n: int,
    base: Sequence[Iterable[int]],
    owner: Mapping[int, int] | Sequence[int],
    labels: Iterable[str] | None = None,
) -> FiniteTopology:
    """Build a topology where point ``x`` has minimal set ``base[owner[x]]``.

    Raises ``InvalidBase`` naming the offending pair when a point is missing
    from its own set or minimal sets fail downward coherence.
    """
    sets = [bits.mask(b) for b in base]
    mins = tuple(sets[owner[x]] for x in range(n))
    return FiniteTopology(n, mins, tuple(labels or ()))


def from_min_sets(
    mins: Sequence[Iterable[int]], labels: Iterable[str] | None = None
) -> FiniteTopology:
    """Convenience: ``mins[x]`` lists the members of ``m(x)``."""
    return FiniteTopology(len(mins), tuple(bits.mask(s) for s in mins), tuple(labels or ()))


def from_open_sets(
    n: int, family: Iterable[Iterable[int] | int], labels: Iterable[str] | None = None
) -> FiniteTopology:
    """Topology generated by ``family`` (plus the empty set and the ground set).

    The minimal set of ``x`` in the generated topology is the intersection
    of the family members containing ``x``: that intersection is itself
    generated, and every generated open set containing ``x`` contains it.
    """
    if n > bits.MAX_POINTS:
        raise TooLarge(f"{n} points exceeds the {bits.MAX_POINTS}-point cap")
    ground = bits.full(n)
    sets = [f if isinstance(f, int) else bits.mask(f) for f in family]
    mins = []
    for x in range(n):
        mx = ground
        for s in sets:
            if s >> x & 1:
                mx &= s
        mins.append(mx)
    return FiniteTopology(n, tuple(mins), tuple(labels or ()))


def discrete(n: int) -> FiniteTopology:
    return FiniteTopology(n, tuple(1 << x for x in range(n)))


def indiscrete(n: int) -> FiniteTopology:
    return FiniteTopology(n, (bits.full(n),) * n)


# queries


def open_sets(t: FiniteTopology) -> list[int]:
    """Every open set (unions of minimal sets, plus the empty set), sorted by value."""
    base = t.minimal_base()
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for b in base:
                w = u | b
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(seen)


def is_open(t: FiniteTopology, u: int) -> bool:
    return min_union(t.mins, u) == u


def is_closed(t: FiniteTopology, k: int) -> bool:
    return is_open(t, t.ground & ~k)


def min_set_of_subset(t: FiniteTopology, s: int) -> int:
    """Smallest open set containing ``s``; the empty set maps to itself."""
    return min_union(t.mins, s)


def _ell(t: FiniteTopology, x: int) -> int:
    avoiding = 0
    for y in range(t.n):
        if not t.mins[y] >> x & 1:
            avoiding |= t.mins[y]
    return t.ground & ~avoiding


def ell(t: FiniteTopology, x: int) -> int:
    """Complement of the union of all open sets that avoid ``x``."""
    return t.ells[x]


def subspace(t: FiniteTopology, s: int) -> tuple[FiniteTopology, tuple[int, ...]]:
    """Subspace topology on ``s`` relabeled to ``0..|s|-1``, plus the original ids."""
    if not s:
        raise EmptySubspace("subspace needs at least one point")
    old = tuple(bits.members(s))
    index = {p: i for i, p in enumerate(old)}
    mins = tuple(bits.mask(index[p] for p in bits.members(t.mins[x] & s)) for x in old)
    return FiniteTopology(len(old), mins, tuple(t.labels[p] for p in old)), old


def incidence_topology(h: Graph) -> tuple[FiniteTopology, list[tuple[str, object]]]:
    """Topology on vertices followed by edges of ``h``.

    Edge-points are open singletons; a vertex-point's minimal set is itself
    plus its incident edge-points. The second return value describes each
    point as ``("v", vertex)`` or ``("e", (u, v))``.
    """
    edges = h.sorted_edges()
    kinds: list[tuple[str, object]] = [("v", v) for v in range(h.n)]
    kinds += [("e", e) for e in edges]
    mins = [1 << v for v in range(h.n)]
    for i, (u, v) in enumerate(edges):
        p = h.n + i
        mins.append(1 << p)
        mins[u] |= 1 << p
        mins[v] |= 1 << p
    labels = list(h.labels) + [f"{h.labels[u]}-{h.labels[v]}" for u, v in edges]
    return FiniteTopology(len(mins), tuple(mins), tuple(labels)), kinds


def _classes(t: FiniteTopology) -> dict[int, int]:
    """Map each distinct minimal set to the points sharing it."""
    out: dict[int, int] = {}
    for x, mx in enumerate(t.mins):
        out[mx] = out.get(mx, 0) | 1 << x
    return out


def _chain_table(t: FiniteTopology) -> tuple[list[int], dict[int, int], dict[int, int]]:
    classes = _classes(t)
    # larger sets first, so every strict superset is finished before its subsets
    order = sorted(classes, key=lambda s: (-bits.popcount(s), s))
    up: dict[int, int] = {}
    for s in order:
        above = [up[r] for r in up if r != s and bits.is_subset(s, r)]
        up[s] = bits.popcount(classes[s]) + max(above, default=0)
    return order, classes, up


def height(t: FiniteTopology) -> int:
    """Length of the longest chain of distinct points with nested minimal sets."""
    if t.n == 0:
        return 0
    return max(_chain_table(t)[2].values())


def longest_chain(t: FiniteTopology) -> list[int]:
    """Lexicographically least chain of maximum length.

    A maximum chain takes whole classes of points with equal minimal sets,
    so the choice reduces to a sequence of classes; the first point of each
    class decides the comparison, which makes a greedy pick exact.
    """
    if t.n == 0:
        return []
    _, classes, up = _chain_table(t)
    remaining = max(up.values())
    chain: list[int] = []
    current: int | None = None
    while remaining:
        cands = [
            s
            for s in up
            if up[s] == remaining
            and (current is None or (s != current and bits.is_subset(current, s)))
        ]
        s = min(cands, key=lambda c: classes[c] & -classes[c])
        chain.extend(bits.members(classes[s]))
        remaining -= bits.popcount(classes[s])
        current = s
    return chain


def chains(t: FiniteTopology, length: int) -> list[tuple[int, ...]]:
    """All chains of ``length`` distinct points ``v1..vh`` with ``m(v1) <= ... <= m(vh)``.

    Lexicographic order. Used to pick reduction witnesses.
    """
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...]) -> None:
        if len(prefix) == length:
            out.append(prefix)
            return
        last = t.mins[prefix[-1]]
        for y in range(t.n):
            if y not in prefix and bits.is_subset(last, t.mins[y]):
                extend(prefix + (y,))

    for x in range(t.n):
        extend((x,))
    return out


def first_chain(t: FiniteTopology, length: int) -> tuple[int, ...] | None:
    """Lexicographically least chain of the given length, or None."""

    def extend(prefix: tuple[int, ...]) -> tuple[int, ...] | None:
        if len(prefix) == length:
            return prefix
        last = t.mins[prefix[-1]]
        for y in range(t.n):
            if y not in prefix and bits.is_subset(last, t.mins[y]):
                found = extend(prefix + (y,))
                if found:
                    return found
        return None

    for x in range(t.n):
        found = extend((x,))
        if found:
            return found
    return None
