"""Finite posets and lattices over the elements ``0..n-1``.

The order relation is held as one bitmask per element: bit ``y`` of
``up[x]`` is set iff ``x <= y``. Cover relations, down-sets and the
lattice operation tables are all derived from these rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Literal, NamedTuple, Sequence

from .errors import (
    CycleError,
    EmptySetError,
    NotALatticeError,
    RangeError,
    RedundantCoverError,
)

Convention = Literal["paper", "rival"]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def _close(up: list[int]) -> list[int]:
    # Warshall over bit rows
    n = len(up)
    for k in range(n):
        kbit = 1 << k
        row_k = up[k]
        for i in range(n):
            if up[i] & kbit:
                up[i] |= row_k
    return up


@dataclass(frozen=True)
class Poset:
    """Immutable finite partial order on ``range(n)``."""

    n: int
    up: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.up) != self.n:
            raise RangeError(f"a poset needs n >= 1 rows, got n={self.n}, rows={len(self.up)}")
        full = (1 << self.n) - 1
        for x, row in enumerate(self.up):
            if row & ~full:
                raise RangeError(f"row {x} mentions elements outside 0..{self.n - 1}")
            if not row >> x & 1:
                raise ValueError(f"order is not reflexive at {x}")
            for y in bits(row):
                if y != x and self.up[y] >> x & 1:
                    raise CycleError(f"elements {x} and {y} are mutually below each other")
                if self.up[y] & ~row:
                    raise ValueError(f"order is not transitive through {x} <= {y}")

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and bool(self.up[x] >> y & 1)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    @cached_property
    def down(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for x, row in enumerate(self.up):
            for y in bits(row):
                rows[y] |= 1 << x
        return tuple(rows)

    @cached_property
    def matrix(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(bool(row >> y & 1) for y in range(self.n)) for row in self.up)

    @cached_property
    def upper_covers(self) -> tuple[int, ...]:
        """Bitmask per element of the elements covering it."""
        out = []
        for x in range(self.n):
            strict = self.up[x] & ~(1 << x)
            above = 0
            for z in bits(strict):
                above |= self.up[z] & ~(1 << z)
            out.append(strict & ~above)
        return tuple(out)

    @cached_property
    def lower_covers(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for x, row in enumerate(self.upper_covers):
            for y in bits(row):
                rows[y] |= 1 << x
        return tuple(rows)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Sorted ``(lower, upper)`` pairs of the transitive reduction."""
        return tuple((a, b) for a in range(self.n) for b in bits(self.upper_covers[a]))

    @cached_property
    def minimal(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.n) if self.down[x] == 1 << x)

    @cached_property
    def maximal(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.n) if self.up[x] == 1 << x)

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        return tuple(sorted(range(self.n), key=lambda x: (self.down[x].bit_count(), x)))


def _check_range(n: int, pairs: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    if n < 1:
        raise RangeError(f"element count must be positive, got {n}")
    out = []
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise RangeError(f"pair ({a}, {b}) outside 0..{n - 1}")
        out.append((a, b))
    return out


def _closure_of(n: int, pairs: list[tuple[int, int]]) -> list[int]:
    up = [1 << x for x in range(n)]
    for a, b in pairs:
        up[a] |= 1 << b
    up = _close(up)
    for a, b in pairs:
        if a == b or up[b] >> a & 1:
            raise CycleError(f"pair ({a}, {b}) closes a cycle")
    return up


def poset_from_covers(n: int, covers: Iterable[tuple[int, int]], strict: bool = True) -> Poset:
    """Build a poset whose Hasse diagram is ``covers`` (``b`` covers ``a``).

    In strict mode every pair must be a genuine cover of the resulting
    order; a pair implied by the others raises :class:`RedundantCoverError`.
    Relaxed mode accepts any order pairs and keeps their closure.
    """
    pairs = _check_range(n, covers)
    poset = Poset(n, tuple(_closure_of(n, pairs)))
    if strict:
        for a, b in pairs:
            if not poset.upper_covers[a] >> b & 1:
                raise RedundantCoverError((a, b))
        if len(set(pairs)) != len(pairs):
            dup = next(p for p in pairs if pairs.count(p) > 1)
            raise RedundantCoverError(dup)
    return poset


def poset_from_relation(n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    return poset_from_covers(n, pairs, strict=False)


def poset_from_leq(matrix: Sequence[Sequence[bool]]) -> Poset:
    n = len(matrix)
    return Poset(n, tuple(mask_of(y for y in range(n) if matrix[x][y]) for x in range(n)))


class LatticeCheck(NamedTuple):
    ok: bool
    witness: tuple[int, int] | None = None
    missing: str | None = None


def _bound(candidates: int, rows: tuple[int, ...]) -> int | None:
    # the element of ``candidates`` whose row contains all of ``candidates``
    for z in bits(candidates):
        if candidates & ~rows[z] == 0:
            return z
    return None


def is_lattice(p: Poset) -> LatticeCheck:
    """Check that every pair has a join and a meet; report the first pair lacking one."""
    up, down = p.up, p.down
    for x in range(p.n):
        for y in range(x + 1, p.n):
            if _bound(up[x] & up[y], up) is None:
                return LatticeCheck(False, (x, y), "join")
            if _bound(down[x] & down[y], down) is None:
                return LatticeCheck(False, (x, y), "meet")
    return LatticeCheck(True)


@dataclass(frozen=True)
class Lattice:
    poset: Poset
    join_table: tuple[tuple[int, ...], ...]
    meet_table: tuple[tuple[int, ...], ...]
    bottom: int
    top: int

    @property
    def n(self) -> int:
        return self.poset.n

    def __len__(self) -> int:
        return self.poset.n

    def leq(self, x: int, y: int) -> bool:
        return self.poset.leq(x, y)

    def lt(self, x: int, y: int) -> bool:
        return self.poset.lt(x, y)

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    @property
    def covers(self) -> tuple[tuple[int, int], ...]:
        return self.poset.covers

    @property
    def up(self) -> tuple[int, ...]:
        return self.poset.up

    @property
    def down(self) -> tuple[int, ...]:
        return self.poset.down

    @property
    def upper_covers(self) -> tuple[int, ...]:
        return self.poset.upper_covers

    @property
    def lower_covers(self) -> tuple[int, ...]:
        return self.poset.lower_covers


def lattice_from_poset(p: Poset) -> Lattice:
    up, down = p.up, p.down
    joins = [[0] * p.n for _ in range(p.n)]
    meets = [[0] * p.n for _ in range(p.n)]
    for x in range(p.n):
        for y in range(x, p.n):
            j = _bound(up[x] & up[y], up)
            if j is None:
                raise NotALatticeError((x, y), "join")
            m = _bound(down[x] & down[y], down)
            if m is None:
                raise NotALatticeError((x, y), "meet")
            joins[x][y] = joins[y][x] = j
            meets[x][y] = meets[y][x] = m
    bottom, top = p.minimal, p.maximal
    return Lattice(p, tuple(map(tuple, joins)), tuple(map(tuple, meets)), bottom[0], top[0])


def lattice_from_covers(n: int, covers: Iterable[tuple[int, int]], strict: bool = True) -> Lattice:
    return lattice_from_poset(poset_from_covers(n, covers, strict=strict))


def _p(obj: Poset | Lattice) -> Poset:
    return obj.poset if isinstance(obj, Lattice) else obj


def join(L: Lattice, x: int, y: int) -> int:
    return L.join_table[x][y]


def meet(L: Lattice, x: int, y: int) -> int:
    return L.meet_table[x][y]


def up_set(P: Poset | Lattice, x: int) -> frozenset[int]:
    return frozenset(bits(_p(P).up[x]))


def down_set(P: Poset | Lattice, x: int) -> frozenset[int]:
    return frozenset(bits(_p(P).down[x]))


def incomparables_mask(P: Poset | Lattice, x: int) -> int:
    p = _p(P)
    return ((1 << p.n) - 1) & ~(p.up[x] | p.down[x])


def incomparables(P: Poset | Lattice, x: int) -> frozenset[int]:
    return frozenset(bits(incomparables_mask(P, x)))


@dataclass(frozen=True)
class IrreducibleProfile:
    atoms: frozenset[int]
    dual_atoms: frozenset[int]
    join_irr: frozenset[int]
    meet_irr: frozenset[int]
    join_red: frozenset[int]
    meet_red: frozenset[int]
    convention: Convention = "paper"

    @property
    def doubly_irr(self) -> frozenset[int]:
        return self.join_irr & self.meet_irr

    @property
    def doubly_red(self) -> frozenset[int]:
        return self.join_red & self.meet_red


def irreducible_profile(L: Lattice, convention: Convention = "paper") -> IrreducibleProfile:
    """Classify elements by counting lower covers (join side) and upper covers (meet side).

    With ``convention="rival"`` the bottom is also counted join-irreducible
    and the top meet-irreducible.
    """
    if convention not in ("paper", "rival"):
        raise ValueError(f"unknown convention {convention!r}")
    p = L.poset
    n_lower = [m.bit_count() for m in p.lower_covers]
    n_upper = [m.bit_count() for m in p.upper_covers]
    join_irr = {x for x in range(p.n) if n_lower[x] == 1}
    meet_irr = {x for x in range(p.n) if n_upper[x] == 1}
    if convention == "rival":
        join_irr.add(L.bottom)
        meet_irr.add(L.top)
    return IrreducibleProfile(
        atoms=frozenset(bits(p.upper_covers[L.bottom])) if p.n > 1 else frozenset(),
        dual_atoms=frozenset(bits(p.lower_covers[L.top])) if p.n > 1 else frozenset(),
        join_irr=frozenset(join_irr),
        meet_irr=frozenset(meet_irr),
        join_red=frozenset(x for x in range(p.n) if n_lower[x] > 1),
        meet_red=frozenset(x for x in range(p.n) if n_upper[x] > 1),
        convention=convention,
    )


def length(P: Poset | Lattice) -> int:
    """Size of a longest chain minus one."""
    return max(ranks(P))


def ranks(P: Poset | Lattice) -> tuple[int, ...]:
    """Length of the longest chain ending at each element."""
    p = _p(P)
    height = [0] * p.n
    for x in p.linear_extension:
        for y in bits(p.lower_covers[x]):
            height[x] = max(height[x], height[y] + 1)
    return tuple(height)


class Restriction(NamedTuple):
    poset: Poset
    old_to_new: dict[int, int]
    new_to_old: tuple[int, ...]


def induced_subposet(P: Poset | Lattice, subset: Iterable[int]) -> Restriction:
    """Restrict the order to ``subset``; elements are relabelled in increasing order."""
    p = _p(P)
    keep = tuple(sorted(set(subset)))
    if not keep:
        raise EmptySetError("cannot restrict a poset to the empty set")
    for x in keep:
        if not 0 <= x < p.n:
            raise RangeError(f"element {x} outside 0..{p.n - 1}")
    index = {old: new for new, old in enumerate(keep)}
    rows = tuple(mask_of(index[y] for y in bits(p.up[x]) if y in index) for x in keep)
    return Restriction(Poset(len(keep), rows), index, keep)


def remove_elements(P: Poset | Lattice, removed: Iterable[int]) -> Restriction:
    p = _p(P)
    gone = set(removed)
    return induced_subposet(p, (x for x in range(p.n) if x not in gone))


def dual(P: Poset | Lattice) -> Poset | Lattice:
    """Reverse the order. Lattices come back as lattices with swapped tables."""
    if isinstance(P, Lattice):
        return Lattice(dual(P.poset), P.meet_table, P.join_table, P.top, P.bottom)
    return Poset(P.n, P.down)


def relabel(P: Poset | Lattice, perm: Sequence[int]) -> Poset | Lattice:
    """Rename element ``x`` to ``perm[x]``."""
    p = _p(P)
    if sorted(perm) != list(range(p.n)):
        raise RangeError("relabelling must be a permutation of the elements")
    rows = [0] * p.n
    for x in range(p.n):
        rows[perm[x]] = mask_of(perm[y] for y in bits(p.up[x]))
    q = Poset(p.n, tuple(rows))
    return lattice_from_poset(q) if isinstance(P, Lattice) else q


def is_chain(P: Poset | Lattice, subset: Iterable[int] | None = None, treat_empty_as_chain: bool = True) -> bool:
    p = _p(P)
    elems = list(range(p.n)) if subset is None else sorted(set(subset))
    if not elems:
        return treat_empty_as_chain
    return all(p.comparable(a, b) for i, a in enumerate(elems) for b in elems[i + 1:])


class ChainUnion(NamedTuple):
    ok: bool
    k: int


def is_disjoint_union_of_chains(P: Poset | Lattice, subset: Iterable[int] | None = None) -> ChainUnion:
    """Split ``subset`` into comparability components; succeed iff each is a chain.

    ``k`` is the number of components (also reported on failure).
    """
    p = _p(P)
    remaining = mask_of(range(p.n)) if subset is None else mask_of(subset)
    comparable = [p.up[x] | p.down[x] for x in range(p.n)]
    k = 0
    ok = True
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = frontier = 1 << start
        while frontier:
            grown = 0
            for x in bits(frontier):
                grown |= comparable[x]
            grown &= remaining & ~comp
            comp |= grown
            frontier = grown
        remaining &= ~comp
        k += 1
        if not is_chain(p, bits(comp)):
            ok = False
    return ChainUnion(ok, k)
