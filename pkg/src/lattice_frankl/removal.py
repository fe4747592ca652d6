"""Removing join- and meet-irreducible elements from a finite lattice.

Deleting a single element leaves a lattice exactly when that element is
join- or meet-irreducible; deleting any set of join-irreducibles (or any
set of meet-irreducibles) also leaves a lattice, but mixing the two kinds
can fail. The builders at the bottom return the small lattices that
demonstrate the two boundary cases and check their own claims.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, NamedTuple, Sequence

from .errors import NotALatticeError, NotIrreducibleError, SizeError
from .fixtures import MIX8_J, MIX8_M, fixture
from .order import (
    Lattice,
    Restriction,
    irreducible_profile,
    is_lattice,
    lattice_from_poset,
    remove_elements,
)

Mode = Literal["join", "meet"]


@dataclass(frozen=True)
class RemovalCheck:
    """Both sides of the single-element removal equivalence for one element."""

    element: int
    irreducible: bool
    removal_is_lattice: bool
    # bottom/top counted irreducible unconditionally
    irreducible_rival: bool
    witness: tuple[int, int] | None = None

    @property
    def agree(self) -> bool:
        return self.irreducible == self.removal_is_lattice

    @property
    def readings_disagree(self) -> bool:
        return self.irreducible != self.irreducible_rival


def removal_lattice_iff_irreducible(L: Lattice, x: int) -> RemovalCheck:
    if L.n < 2:
        raise SizeError("removal needs a lattice with more than one element")
    prof = irreducible_profile(L)
    rival = irreducible_profile(L, "rival")
    rest = remove_elements(L, [x])
    check = is_lattice(rest.poset)
    witness = None
    if check.witness is not None:
        witness = (rest.new_to_old[check.witness[0]], rest.new_to_old[check.witness[1]])
    return RemovalCheck(
        element=x,
        irreducible=x in prof.join_irr or x in prof.meet_irr,
        removal_is_lattice=check.ok,
        irreducible_rival=x in rival.join_irr or x in rival.meet_irr,
        witness=witness,
    )


def _cover_count(rest: Restriction, old: int, side: Mode) -> int:
    new = rest.old_to_new[old]
    rows = rest.poset.lower_covers if side == "join" else rest.poset.upper_covers
    return rows[new].bit_count()


def irreducible_pair_failures(L: Lattice) -> list[tuple[Mode, int, int]]:
    """Pairs ``(kind, removed, survivor)`` where the survivor loses irreducibility."""
    prof = irreducible_profile(L)
    failures: list[tuple[Mode, int, int]] = []
    for side, members in (("join", prof.join_irr), ("meet", prof.meet_irr)):
        for first in sorted(members):
            rest = remove_elements(L, [first])
            for second in sorted(members - {first}):
                if _cover_count(rest, second, side) != 1:
                    failures.append((side, first, second))
    return failures


def verify_lemma_1_3(L: Lattice) -> bool:
    return not irreducible_pair_failures(L)


class Removal(NamedTuple):
    lattice: Lattice
    old_to_new: dict[int, int]
    new_to_old: tuple[int, ...]


def _require_irreducible(L: Lattice, elements: Iterable[int], mode: Mode) -> None:
    prof = irreducible_profile(L)
    members = prof.join_irr if mode == "join" else prof.meet_irr
    for x in sorted(elements):
        if x not in members:
            raise NotIrreducibleError(x, mode)


def remove_irreducible_set(L: Lattice, elements: Iterable[int], mode: Mode = "join") -> Removal:
    """Delete a set of join-irreducibles (or meet-irreducibles) and revalidate."""
    if mode not in ("join", "meet"):
        raise ValueError(f"mode must be 'join' or 'meet', got {mode!r}")
    gone = set(elements)
    _require_irreducible(L, gone, mode)
    if len(gone) >= L.n:
        raise SizeError("cannot remove every element")
    rest = remove_elements(L, gone)
    try:
        lat = lattice_from_poset(rest.poset)
    except NotALatticeError as exc:
        raise RuntimeError(f"removal of irreducible set {sorted(gone)} broke the lattice") from exc
    return Removal(lat, rest.old_to_new, rest.new_to_old)


def remove_in_order(L: Lattice, order: Sequence[int], mode: Mode = "join") -> Removal:
    """Remove one element at a time, requiring irreducibility at every step.

    The result is expressed in the ids of ``L`` like :func:`remove_irreducible_set`.
    """
    current = Removal(L, {x: x for x in range(L.n)}, tuple(range(L.n)))
    for x in order:
        local = current.old_to_new[x]
        step = remove_irreducible_set(current.lattice, [local], mode)
        new_to_old = tuple(current.new_to_old[i] for i in step.new_to_old)
        current = Removal(step.lattice, {old: new for new, old in enumerate(new_to_old)}, new_to_old)
    return current


def new_join_irreducibles_cover_removed(L: Lattice, x: int) -> bool:
    """Every element that becomes join-irreducible once ``x`` is deleted covers ``x``."""
    prof = irreducible_profile(L)
    if x not in prof.join_irr and x not in prof.meet_irr:
        raise NotIrreducibleError(x, "join- or meet")
    rest = remove_elements(L, [x])
    for new, old in enumerate(rest.new_to_old):
        promoted = rest.poset.lower_covers[new].bit_count() == 1 and old in prof.join_red
        if promoted and not L.upper_covers[x] >> old & 1:
            return False
    return True


def upset_bookkeeping_holds(L: Lattice, j: int) -> bool:
    """Up-set sizes after deleting ``j`` drop by one exactly below ``j``."""
    rest = remove_elements(L, [j])
    for new, old in enumerate(rest.new_to_old):
        expected = L.up[old].bit_count() - (1 if L.lt(old, j) else 0)
        if rest.poset.up[new].bit_count() != expected:
            return False
    return True


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise RuntimeError(f"fixture self-check failed: {message}")


def build_mixed_removal_counterexample() -> tuple[Lattice, frozenset[int]]:
    """MIX8 together with ``{j, m}``: mixed irreducibles whose joint removal is not a lattice."""
    L = fixture("MIX8")
    j, m = MIX8_J, MIX8_M
    prof = irreducible_profile(L)
    _require(j in prof.join_irr and j in prof.meet_red, "j join-irreducible and meet-reducible")
    _require(m in prof.meet_irr and m in prof.join_red, "m meet-irreducible and join-reducible")
    _require(bool(L.upper_covers[m] >> j & 1), "j covers m")
    _require(not is_lattice(remove_elements(L, [j, m]).poset).ok, "removing {j, m} breaks the lattice")
    return L, frozenset({j, m})


def build_lemma_1_3_converse_example() -> tuple[Lattice, int, int]:
    """B2 with ``removed=1`` and ``promoted=3``: the top becomes join-irreducible."""
    L = fixture("B2")
    removed, promoted = 1, 3
    prof = irreducible_profile(L)
    _require(removed in prof.join_irr, "removed element is join-irreducible")
    _require(promoted in prof.join_red, "promoted element is join-reducible before removal")
    rest = remove_elements(L, [removed])
    _require(_cover_count(rest, promoted, "join") == 1, "promoted element is join-irreducible after removal")
    return L, removed, promoted


def removal_witness_pair(L: Lattice, removed: Iterable[int]) -> tuple[int, int] | None:
    """First pair (in original ids) lacking a join or meet after deletion, if any."""
    rest = remove_elements(L, removed)
    check = is_lattice(rest.poset)
    if check.ok:
        return None
    a, b = check.witness
    return rest.new_to_old[a], rest.new_to_old[b]

