"""Brute-force graph oracles: connectivity, distance, chromatic number, isomorphism."""

from __future__ import annotations

import math

from . import bits
from .errors import TooLarge
from .graph import Graph

INF = math.inf


def component_of(g: Graph, v: int, within: int | None = None) -> int:
    allowed = bits.full(g.n) if within is None else within
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in bits.members(frontier):
            nxt |= g.adj[u]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return component_of(g, 0) == bits.full(g.n)


def components(g: Graph) -> list[int]:
    out = []
    left = bits.full(g.n)
    while left:
        v = (left & -left).bit_length() - 1
        c = component_of(g, v)
        out.append(c)
        left &= ~c
    return out


def distance(g: Graph, u: int, v: int) -> float:
    """Shortest path length; ``math.inf`` when ``u`` and ``v`` are disconnected."""
    if u == v:
        return 0
    seen = 1 << u
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for w in bits.members(frontier):
            nxt |= g.adj[w]
        frontier = nxt & ~seen
        if frontier >> v & 1:
            return d
        seen |= frontier
    return INF


CHROMATIC_LIMIT = 12


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by branch and bound (DSATUR order)."""
    if g.n > CHROMATIC_LIMIT:
        raise TooLarge(f"chromatic number is limited to {CHROMATIC_LIMIT} vertices")
    if g.n == 0:
        return 0
    if not g.edges:
        return 1
    colors = [-1] * g.n
    best = g.n

    def pick() -> int:
        # most distinct neighbor colors, then highest degree
        choice, key = -1, (-1, -1)
        for v in range(g.n):
            if colors[v] >= 0:
                continue
            sat = len({colors[u] for u in bits.members(g.adj[v]) if colors[u] >= 0})
            k = (sat, g.degree(v))
            if k > key:
                choice, key = v, k
        return choice

    def search(used: int, colored: int) -> None:
        nonlocal best
        if used >= best:
            return
        if colored == g.n:
            best = used
            return
        v = pick()
        taken = {colors[u] for u in bits.members(g.adj[v]) if colors[u] >= 0}
        for c in range(min(used + 1, best - 1)):
            if c in taken:
                continue
            colors[v] = c
            search(max(used, c + 1), colored + 1)
            colors[v] = -1

    search(0, 0)
    return best


ISOMORPHISM_LIMIT = 10


def are_isomorphic(g: Graph, h: Graph) -> dict[int, int] | None:
    """A vertex bijection ``g -> h`` preserving adjacency, or None.

    Backtracking over vertices of ``g`` in decreasing-degree order; a
    candidate image must match degree, sorted neighbor degrees, and
    adjacency to every vertex already mapped.
    """
    if max(g.n, h.n) > ISOMORPHISM_LIMIT:
        raise TooLarge(f"isomorphism search is limited to {ISOMORPHISM_LIMIT} vertices")
    if g.n != h.n or g.m != h.m:
        return None

    def signature(x: Graph, v: int) -> tuple[int, tuple[int, ...]]:
        return x.degree(v), tuple(sorted(x.degree(u) for u in bits.members(x.adj[v])))

    sg = [signature(g, v) for v in range(g.n)]
    sh = [signature(h, v) for v in range(h.n)]
    if sorted(sg) != sorted(sh):
        return None
    order = sorted(range(g.n), key=lambda v: (-sg[v][0], v))
    image: dict[int, int] = {}
    used = 0

    def search(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        v = order[i]
        for w in range(h.n):
            if used >> w & 1 or sh[w] != sg[v]:
                continue
            if any(g.has_edge(v, u) != h.has_edge(w, image[u]) for u in image):
                continue
            image[v] = w
            used |= 1 << w
            if search(i + 1):
                return True
            del image[v]
            used &= ~(1 << w)
        return False

    return dict(sorted(image.items())) if search(0) else None
