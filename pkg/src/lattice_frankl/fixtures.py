"""Small named lattices used as fixtures; element 0 is always the bottom."""

from __future__ import annotations

from .order import Lattice, lattice_from_covers

COVERS: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    "C2": (2, ((0, 1),)),
    "C3": (3, ((0, 1), (1, 2))),
    "B2": (4, ((0, 1), (0, 2), (1, 3), (2, 3))),
    "M3": (5, ((0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4))),
    "N5": (5, ((0, 1), (1, 2), (2, 4), (0, 3), (3, 4))),
    # subsets of {0,1,2} as bit masks
    "B3": (8, tuple((s, s | 1 << i) for s in range(8) for i in range(3) if not s >> i & 1)),
    # 0 < a,b < m < c,d < t
    "DD": (7, ((0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6))),
    # 0 < x1,x2 < m < j < y1,y2 < t
    "MIX8": (8, ((0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 7), (6, 7))),
}

# named elements of the two larger fixtures
DD_A, DD_B, DD_M, DD_C, DD_D, DD_T = 1, 2, 3, 4, 5, 6
MIX8_M, MIX8_J = 3, 4


def fixture(name: str) -> Lattice:
    n, covers = COVERS[name]
    return lattice_from_covers(n, covers)


def chain(n: int) -> Lattice:
    return lattice_from_covers(n, [(i, i + 1) for i in range(n - 1)])


def all_fixtures() -> dict[str, Lattice]:
    return {name: fixture(name) for name in COVERS}
