from __future__ import annotations

import pytest
from hypothesis import strategies as st

from septop import bits
from septop.topology import FiniteTopology, from_minimal_base

ZIGZAG_LABELS = ["1", "2", "3", "4", "5"]


def zigzag() -> FiniteTopology:
    """Five points with minimal base {1}, {1,2,3}, {3}, {3,4,5}, {5} (labels 1..5)."""
    base = [[0], [0, 1, 2], [2], [2, 3, 4], [4]]
    return from_minimal_base(5, base, [0, 1, 2, 3, 4], ZIGZAG_LABELS)


def pts(t_or_labels, *names: str) -> int:
    """Bitmask of the points with the given labels."""
    labels = list(getattr(t_or_labels, "labels", t_or_labels))
    return bits.mask(labels.index(x) for x in names)


def closure(n: int, rows: list[int]) -> tuple[int, ...]:
    mins = [rows[x] & bits.full(n) | 1 << x for x in range(n)]
    changed = True
    while changed:
        changed = False
        for x in range(n):
            grown = mins[x]
            for y in bits.members(mins[x]):
                grown |= mins[y]
            if grown != mins[x]:
                mins[x] = grown
                changed = True
    return tuple(mins)


@st.composite
def topologies(draw, min_n: int = 1, max_n: int = 7) -> FiniteTopology:
    n = draw(st.integers(min_n, max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    # sparse relations give taller spaces
    sparse = draw(st.booleans())
    if sparse:
        rows = [r & draw(st.integers(0, (1 << n) - 1)) for r in rows]
    return FiniteTopology(n, closure(n, rows))


@pytest.fixture
def zz() -> FiniteTopology:
    return zigzag()


collected_acceptance: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if collected_acceptance:
        terminalreporter.section("acceptance criteria")
        for line in collected_acceptance:
            terminalreporter.write_line(line)
