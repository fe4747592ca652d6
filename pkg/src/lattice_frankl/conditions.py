"""Necessary conditions on a smallest lattice violating the conjecture.

Every predicate takes a lattice with at least three elements and returns a
:class:`Verdict`. A failing verdict lists the element tuples that falsify
the statement, so a lattice failing any condition is certified not to be a
minimum-size counterexample. Witness lists are sorted lexicographically.

Two statements quantify over subsets (the meet-irreducible subsets of
``T2_9`` and the sublattice subposets of ``T2_15``); their sweeps are capped
and report ``skipped`` when the cap prevents a complete check that found no
violation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import BadSubsetError, NotALatticeError, SizeError
from .order import (
    Convention,
    Lattice,
    bits,
    incomparables_mask,
    induced_subposet,
    irreducible_profile,
    is_chain,
    is_disjoint_union_of_chains,
    is_lattice,
    length,
    mask_of,
)


class ConditionId(str, enum.Enum):
    T2_1 = "T2_1"
    C2_2_C2_4 = "C2_2_C2_4"
    T2_3 = "T2_3"
    L2_5 = "L2_5"
    T2_6 = "T2_6"
    T2_7 = "T2_7"
    RIVAL = "RIVAL"
    C2_8 = "C2_8"
    OBS_CMP4 = "OBS_CMP4"
    T2_9 = "T2_9"
    C2_10 = "C2_10"
    C2_11 = "C2_11"
    ATOM_MI = "ATOM_MI"
    T2_12 = "T2_12"
    T2_13 = "T2_13"
    C2_14 = "C2_14"
    CHAIN_UNION = "CHAIN_UNION"
    T2_15 = "T2_15"


# stated without proof, so reports flag them as remark-level
REMARK_LEVEL = frozenset({ConditionId.CHAIN_UNION})

Witness = tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    witnesses: tuple[Witness, ...] = ()
    skipped: bool = False
    checked: int | None = None

    @property
    def holds(self) -> bool:
        return not self.witnesses

    @property
    def status(self) -> str:
        if self.witnesses:
            return "fails"
        return "skipped" if self.skipped else "holds"

    @property
    def first_witness(self) -> Witness | None:
        return self.witnesses[0] if self.witnesses else None


def _verdict(witnesses: Iterable[Witness], skipped: bool = False, checked: int | None = None) -> Verdict:
    return Verdict(tuple(sorted(set(witnesses))), skipped, checked)


def _require_size(L: Lattice) -> None:
    if L.n < 3:
        raise SizeError(f"conditions need more than two elements, got {L.n}")


def _interior(L: Lattice) -> list[int]:
    return [x for x in range(L.n) if x not in (L.bottom, L.top)]


def _upsize(L: Lattice, x: int) -> int:
    return L.up[x].bit_count()


def cond_t2_1(L: Lattice) -> Verdict:
    """Each join-irreducible ``j`` (over ``x``) sits under some ``y`` with exactly
    two lower covers ``{j, z}``, ``x < z``, and ``y`` below no join-irreducible."""
    _require_size(L)
    prof = irreducible_profile(L)
    jmask = mask_of(prof.join_irr)
    bad = []
    for j in sorted(prof.join_irr):
        (x,) = bits(L.lower_covers[j])
        ok = False
        for y in bits(L.upper_covers[j]):
            if L.up[y] & jmask:
                continue
            below = L.lower_covers[y]
            if below.bit_count() != 2:
                continue
            (z,) = bits(below & ~(1 << j))
            if L.lt(x, z):
                ok = True
                break
        if not ok:
            bad.append((j,))
    return _verdict(bad)


def cond_extremal_reducibility(L: Lattice) -> Verdict:
    """Bottom is meet-reducible and top is join-reducible."""
    _require_size(L)
    bad = []
    if L.upper_covers[L.bottom].bit_count() < 2:
        bad.append((L.bottom,))
    if L.lower_covers[L.top].bit_count() < 2:
        bad.append((L.top,))
    return _verdict(bad)


def cond_t2_3(L: Lattice) -> Verdict:
    """No meet-irreducible lies strictly below a join-irreducible; witnesses are ``(m, j)``."""
    _require_size(L)
    prof = irreducible_profile(L)
    return _verdict((m, j) for m in prof.meet_irr for j in prof.join_irr if L.lt(m, j))


def cond_l2_5(L: Lattice) -> Verdict:
    _require_size(L)
    prof = irreducible_profile(L)
    return _verdict((x,) for x in prof.doubly_irr if 2 * _upsize(L, x) != L.n + 1)


def cond_t2_6(L: Lattice) -> Verdict:
    """At most one doubly irreducible element; the witness lists all of them."""
    _require_size(L)
    d = sorted(irreducible_profile(L).doubly_irr)
    return _verdict([tuple(d)] if len(d) > 1 else [])


def cond_t2_7(L: Lattice) -> Verdict:
    _require_size(L)
    ell = length(L)
    return _verdict((j,) for j in irreducible_profile(L).join_irr if _upsize(L, j) <= ell)


def longest_chain(L: Lattice) -> tuple[int, ...]:
    """Lexicographically smallest chain of maximum size, listed bottom to top."""
    p = L.poset
    best: dict[int, tuple[int, ...]] = {}
    for x in reversed(p.linear_extension):
        tails = [best[y] for y in bits(p.upper_covers[x])]
        if tails:
            top = max(len(t) for t in tails)
            best[x] = (x,) + min(t for t in tails if len(t) == top)
        else:
            best[x] = (x,)
    return best[L.bottom]


def rival_inequality(L: Lattice, convention: Convention = "rival") -> Verdict:
    """``|L| >= 2(length + 1) - |doubly irreducible|``; a failure is witnessed by a longest chain."""
    d = len(irreducible_profile(L, convention).doubly_irr)
    if L.n >= 2 * (length(L) + 1) - d:
        return Verdict()
    return _verdict([longest_chain(L)])


def cond_c2_8(L: Lattice) -> Verdict:
    _require_size(L)
    prof = irreducible_profile(L)
    red = mask_of(prof.doubly_red)
    return _verdict((x,) for x in prof.doubly_irr if not (L.up[x] & ~(1 << x) & red))


def cond_obs_cmp4(L: Lattice) -> Verdict:
    """Each interior element is comparable with at least four others."""
    _require_size(L)
    return _verdict((x,) for x in _interior(L) if _upsize(L, x) + L.down[x].bit_count() - 2 < 4)


def _t2_9_holds(L: Lattice, join_irr: Iterable[int], m_mask: int) -> bool:
    size = m_mask.bit_count()
    return any(2 * (L.up[j] & m_mask).bit_count() > size for j in join_irr)


def cond_t2_9(L: Lattice, M: Iterable[int]) -> Verdict:
    """Some join-irreducible lies below more than half of ``M``."""
    _require_size(L)
    members = frozenset(M)
    prof = irreducible_profile(L)
    if not members:
        raise BadSubsetError("M must be nonempty")
    if not members <= prof.meet_irr:
        extra = sorted(members - prof.meet_irr)
        raise BadSubsetError(f"elements {extra} are not meet-irreducible")
    if _t2_9_holds(L, prof.join_irr, mask_of(members)):
        return Verdict()
    return _verdict([tuple(sorted(members))])


def cond_t2_9_sweep(L: Lattice, cap: int = 12) -> Verdict:
    """Check every nonempty ``M`` of meet-irreducibles with ``|M| <= cap``, plus the full set."""
    _require_size(L)
    prof = irreducible_profile(L)
    mi = sorted(prof.meet_irr)
    join_irr = sorted(prof.join_irr)
    bad = []
    checked = 0
    subsets: list[tuple[int, ...]] = [c for k in range(1, min(cap, len(mi)) + 1) for c in combinations(mi, k)]
    if len(mi) > cap:
        subsets.append(tuple(mi))
    for sub in subsets:
        checked += 1
        if not _t2_9_holds(L, join_irr, mask_of(sub)):
            bad.append(sub)
    return _verdict(bad, skipped=len(mi) > cap, checked=checked)


def cond_c2_10(L: Lattice) -> Verdict:
    _require_size(L)
    return cond_t2_9(L, irreducible_profile(L).meet_irr)


def cond_c2_11(L: Lattice) -> Verdict:
    """Any two meet-irreducibles have a common join-irreducible below them."""
    _require_size(L)
    prof = irreducible_profile(L)
    jmask = mask_of(prof.join_irr)
    return _verdict(
        (a, b) for a, b in combinations(sorted(prof.meet_irr), 2) if not (L.down[a] & L.down[b] & jmask)
    )


def cond_atom_meet_irr(L: Lattice) -> Verdict:
    """A meet-irreducible atom lies below every other meet-irreducible; witnesses ``(atom, m)``."""
    _require_size(L)
    prof = irreducible_profile(L)
    return _verdict(
        (a, m) for a in prof.atoms & prof.meet_irr for m in prof.meet_irr if m != a and not L.lt(a, m)
    )


def cond_t2_12(L: Lattice) -> Verdict:
    _require_size(L)
    prof = irreducible_profile(L)
    good_j = mask_of(j for j in prof.join_irr if 2 * _upsize(L, j) == L.n + 1)
    return _verdict((m,) for m in prof.meet_irr if not (L.down[m] & good_j))


def cond_t2_13(L: Lattice) -> Verdict:
    """For interior ``x`` the incomparables of ``x`` do not form a chain (the empty set is a chain)."""
    _require_size(L)
    return _verdict((x,) for x in _interior(L) if is_chain(L, bits(incomparables_mask(L, x))))


def cond_c2_14(L: Lattice) -> Verdict:
    _require_size(L)
    return _verdict((x,) for x in _interior(L) if incomparables_mask(L, x).bit_count() < 3)


def cond_chain_union(L: Lattice) -> Verdict:
    _require_size(L)
    return _verdict(
        (x,) for x in _interior(L) if is_disjoint_union_of_chains(L, bits(incomparables_mask(L, x))).ok
    )


def check_t2_15(L: Lattice, subset: Iterable[int]) -> Verdict:
    """Evaluate the sublattice statement for one subposet ``subset`` of ``L``.

    Applies when ``3 < |S| < 8``, or when ``2 < |S| < |L| - 2`` and some dual
    atom of ``L`` lies below the top of ``S``. It then requires an element of
    ``S`` other than its own bottom and top to cover, or be covered by, an
    element outside ``S``.
    """
    _require_size(L)
    members = sorted(set(subset))
    rest = induced_subposet(L, members)
    check = is_lattice(rest.poset)
    if not check.ok:
        a, b = check.witness
        raise NotALatticeError((rest.new_to_old[a], rest.new_to_old[b]), check.missing)
    return Verdict() if _t2_15_ok(L, members, rest) else _verdict([tuple(members)])


def _t2_15_ok(L: Lattice, members: list[int], rest) -> bool:
    k = len(members)
    sub_bottom = rest.new_to_old[rest.poset.minimal[0]]
    sub_top = rest.new_to_old[rest.poset.maximal[0]]
    crit_i = 3 < k < 8
    crit_ii = 2 < k < L.n - 2 and bool(L.lower_covers[L.top] & L.down[sub_top])
    if not (crit_i or crit_ii):
        return True
    inside = mask_of(members)
    for x in members:
        if x in (sub_bottom, sub_top):
            continue
        if (L.upper_covers[x] | L.lower_covers[x]) & ~inside:
            return True
    return False


@dataclass(frozen=True)
class Caps:
    t2_9_subset: int = 12
    t2_15_subset: int = 7
    t2_15_lattice: int = 12

    def to_dict(self) -> dict[str, int]:
        return {
            "t2_9_subset": self.t2_9_subset,
            "t2_15_subset": self.t2_15_subset,
            "t2_15_lattice": self.t2_15_lattice,
        }


def sweep_t2_15(L: Lattice, cap: int = 7, max_lattice: int = 12) -> Verdict:
    """Check all sublattice subposets with at most ``cap`` elements."""
    _require_size(L)
    if L.n > max_lattice:
        return Verdict(skipped=True, checked=0)
    needed = max(min(7, L.n), L.n - 3)
    bad = []
    checked = 0
    for k in range(3, min(cap, L.n) + 1):
        for members in combinations(range(L.n), k):
            rest = induced_subposet(L, members)
            if not is_lattice(rest.poset).ok:
                continue
            checked += 1
            if not _t2_15_ok(L, list(members), rest):
                bad.append(members)
    return _verdict(bad, skipped=cap < needed, checked=checked)


@dataclass
class ConditionReport:
    n: int
    cert: object
    verdicts: dict[ConditionId, Verdict]
    caps: Caps
    # how bottom and top were classified under the cover-counting definitions
    extremal: dict[str, bool] = field(default_factory=dict)

    def failed(self) -> list[ConditionId]:
        return [c for c in ConditionId if self.verdicts[c].status == "fails"]

    def status_vector(self) -> dict[str, str]:
        return {c.value: self.verdicts[c].status for c in ConditionId}

    def to_dict(self) -> dict:
        conditions = {}
        for c in ConditionId:
            v = self.verdicts[c]
            entry: dict = {"status": v.status, "witnesses": [list(w) for w in v.witnesses]}
            if c is ConditionId.T2_9:
                entry["cap"] = self.caps.t2_9_subset
            elif c is ConditionId.T2_15:
                entry["cap"] = self.caps.t2_15_subset
            if c in REMARK_LEVEL:
                entry["remark_level"] = True
            conditions[c.value] = entry
        out = {"n": self.n, "conditions": conditions, "caps": self.caps.to_dict(), "extremal": self.extremal}
        if self.cert is not None:
            out["cert"] = [list(pair) for pair in self.cert.covers]
        return out


def extremal_classification(L: Lattice) -> dict[str, bool]:
    prof = irreducible_profile(L)
    return {
        "bottom_meet_irreducible": L.bottom in prof.meet_irr,
        "top_join_irreducible": L.top in prof.join_irr,
    }


def evaluate_all(L: Lattice, caps: Caps | None = None, cert=None) -> ConditionReport:
    _require_size(L)
    caps = caps or Caps()
    verdicts = {
        ConditionId.T2_1: cond_t2_1(L),
        ConditionId.C2_2_C2_4: cond_extremal_reducibility(L),
        ConditionId.T2_3: cond_t2_3(L),
        ConditionId.L2_5: cond_l2_5(L),
        ConditionId.T2_6: cond_t2_6(L),
        ConditionId.T2_7: cond_t2_7(L),
        ConditionId.RIVAL: rival_inequality(L, "rival"),
        ConditionId.C2_8: cond_c2_8(L),
        ConditionId.OBS_CMP4: cond_obs_cmp4(L),
        ConditionId.T2_9: cond_t2_9_sweep(L, caps.t2_9_subset),
        ConditionId.C2_10: cond_c2_10(L),
        ConditionId.C2_11: cond_c2_11(L),
        ConditionId.ATOM_MI: cond_atom_meet_irr(L),
        ConditionId.T2_12: cond_t2_12(L),
        ConditionId.T2_13: cond_t2_13(L),
        ConditionId.C2_14: cond_c2_14(L),
        ConditionId.CHAIN_UNION: cond_chain_union(L),
        ConditionId.T2_15: sweep_t2_15(L, caps.t2_15_subset, caps.t2_15_lattice),
    }
    return ConditionReport(L.n, cert, verdicts, caps, extremal_classification(L))


def incomparable_pair_violations(L: Lattice) -> list[int]:
    """Interior ``x`` with at most two incomparables that form neither a chain
    nor a pair of doubly irreducible elements."""
    doubly = irreducible_profile(L).doubly_irr
    bad = []
    for x in _interior(L) if L.n > 2 else []:
        inc = list(bits(incomparables_mask(L, x)))
        if len(inc) > 2 or is_chain(L, inc):
            continue
        if not (len(inc) == 2 and set(inc) <= doubly):
            bad.append(x)
    return bad
