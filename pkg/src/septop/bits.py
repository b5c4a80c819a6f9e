"""Small helpers for point sets stored as integer bitmasks."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

MAX_POINTS = 64


def mask(points: Iterable[int]) -> int:
    out = 0
    for p in points:
        out |= 1 << p
    return out


def members(m: int) -> Iterator[int]:
    """Yield the set bits of ``m`` in increasing order."""
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def to_list(m: int) -> list[int]:
    return list(members(m))


def popcount(m: int) -> int:
    return bin(m).count("1")


def full(n: int) -> int:
    return (1 << n) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0
