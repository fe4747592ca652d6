"""Isomorph-free generation of finite lattices.

A finite lattice with ``n >= 2`` elements is a finite meet-semilattice on
``n - 1`` elements with a new top adjoined, and deleting a maximal element
of a meet-semilattice leaves a meet-semilattice. So the generator grows
meet-semilattices one new maximal element at a time, rejects isomorphic
copies by canonical certificate, and caps every survivor with a top.

``oracle_enumerate`` is a deliberately naive second route (all naturally
labelled strict orders, lattice filter, pairwise isomorphism search) used
only to cross-check the generator.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator

from .errors import ResourceError
from .order import (
    Lattice,
    Poset,
    bits,
    irreducible_profile,
    is_lattice,
    lattice_from_poset,
    mask_of,
    poset_from_covers,
    ranks,
)

DEFAULT_MAX_SIZE = 9
ORACLE_MAX_SIZE = 7


@dataclass(frozen=True, order=True)
class CanonicalCert:
    n: int
    covers: tuple[tuple[int, int], ...]

    def to_poset(self) -> Poset:
        return poset_from_covers(self.n, self.covers)

    def to_lattice(self) -> Lattice:
        return lattice_from_poset(self.to_poset())


def _refined_colors(p: Poset) -> list[int]:
    """Isomorphism-invariant colour per element; rank is the leading key."""
    rank = ranks(p)
    sig = [
        (rank[x], p.down[x].bit_count(), p.up[x].bit_count(),
         p.lower_covers[x].bit_count(), p.upper_covers[x].bit_count())
        for x in range(p.n)
    ]
    colors = _compress(sig)
    while True:
        sig2 = [
            (colors[x],
             tuple(sorted(colors[y] for y in bits(p.lower_covers[x]))),
             tuple(sorted(colors[y] for y in bits(p.upper_covers[x]))))
            for x in range(p.n)
        ]
        new = _compress(sig2)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _compress(signatures: list) -> list[int]:
    table = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [table[s] for s in signatures]


def canonical_labeling(p: Poset) -> tuple[int, ...]:
    """Return ``perm`` with ``perm[old] = new`` minimising the cover code.

    Positions are filled colour class by colour class (colours sorted, rank
    first, so the labelling is a linear extension). The code of a labelling
    is the sequence over positions of the bitmask of labels that the element
    at that position covers; branches whose prefix exceeds the best found
    so far are cut.
    """
    colors = _refined_colors(p)
    slots = sorted(range(p.n), key=lambda x: colors[x])
    slot_color = [colors[x] for x in slots]
    lower = p.lower_covers
    n = p.n

    best: list[int] | None = None
    best_perm: list[int] = []
    label = [-1] * n
    order: list[int] = []
    code: list[int] = []

    def search(pos: int) -> None:
        nonlocal best, best_perm
        if pos == n:
            if best is None or code < best:
                best = code.copy()
                best_perm = order.copy()
            return
        want = slot_color[pos]
        options = sorted(
            (mask_of(label[y] for y in bits(lower[x])), x)
            for x in range(n)
            if label[x] < 0 and colors[x] == want
        )
        for value, x in options:
            if best is not None and code + [value] > best[: pos + 1]:
                break
            label[x] = pos
            order.append(x)
            code.append(value)
            search(pos + 1)
            code.pop()
            order.pop()
            label[x] = -1

    search(0)
    perm = [0] * n
    for new, old in enumerate(best_perm):
        perm[old] = new
    return tuple(perm)


def poset_cert(p: Poset) -> CanonicalCert:
    perm = canonical_labeling(p)
    covers = tuple(sorted((perm[a], perm[b]) for a, b in p.covers))
    return CanonicalCert(p.n, covers)


def canonical_form(L: Lattice | Poset) -> CanonicalCert:
    return poset_cert(L.poset if isinstance(L, Lattice) else L)


def are_isomorphic(a: Lattice | Poset, b: Lattice | Poset) -> bool:
    return canonical_form(a) == canonical_form(b)


def brute_force_isomorphic(a: Lattice | Poset, b: Lattice | Poset) -> bool:
    """Backtracking search for an order isomorphism; independent of certificates."""
    p = a.poset if isinstance(a, Lattice) else a
    q = b.poset if isinstance(b, Lattice) else b
    if p.n != q.n or len(p.covers) != len(q.covers):
        return False
    n = p.n
    size_p = [(p.up[x].bit_count(), p.down[x].bit_count()) for x in range(n)]
    size_q = [(q.up[x].bit_count(), q.down[x].bit_count()) for x in range(n)]
    if sorted(size_p) != sorted(size_q):
        return False
    image = [-1] * n
    used = [False] * n

    def extend(x: int) -> bool:
        if x == n:
            return True
        for y in range(n):
            if used[y] or size_p[x] != size_q[y]:
                continue
            if all(p.leq(x, z) == q.leq(y, image[z]) and p.leq(z, x) == q.leq(image[z], y) for z in range(x)):
                image[x], used[y] = y, True
                if extend(x + 1):
                    return True
                image[x], used[y] = -1, False
        return False

    return extend(0)


def brute_force_isomorphic_permutations(a: Lattice | Poset, b: Lattice | Poset) -> bool:
    """Try every permutation; only usable for very small posets."""
    p = a.poset if isinstance(a, Lattice) else a
    q = b.poset if isinstance(b, Lattice) else b
    if p.n != q.n:
        return False
    for perm in permutations(range(p.n)):
        if all(q.up[perm[x]] == mask_of(perm[y] for y in bits(p.up[x])) for x in range(p.n)):
            return True
    return False


# -- generation ---------------------------------------------------------------


def _is_meet_semilattice(rows_down: list[int], n: int) -> bool:
    for x in range(n):
        for y in range(x + 1, n):
            common = rows_down[x] & rows_down[y]
            if not any(common & ~rows_down[z] == 0 for z in bits(common)):
                return False
    return True


def _extensions(p: Poset) -> Iterator[Poset]:
    """Meet-semilattices obtained by adding one new maximal element above a down-set."""
    n = p.n
    down = p.down
    for ideal in range(1, 1 << n):
        if any(down[x] & ~ideal for x in bits(ideal)):
            continue
        new_down = list(down) + [ideal | 1 << n]
        if not _is_meet_semilattice(new_down, n + 1):
            continue
        up = [row | (1 << n if ideal >> x & 1 else 0) for x, row in enumerate(p.up)]
        up.append(1 << n)
        yield Poset(n + 1, tuple(up))


@lru_cache(maxsize=None)
def _semilattice_certs(k: int) -> tuple[CanonicalCert, ...]:
    if k == 1:
        return (CanonicalCert(1, ()),)
    seen: set[CanonicalCert] = set()
    for cert in _semilattice_certs(k - 1):
        for ext in _extensions(cert.to_poset()):
            seen.add(poset_cert(ext))
    return tuple(sorted(seen))


def _cap_with_top(p: Poset) -> Poset:
    top = p.n
    up = tuple(row | 1 << top for row in p.up) + (1 << top,)
    return Poset(p.n + 1, up)


def _lattice_of(cert: CanonicalCert) -> tuple[CanonicalCert, Lattice]:
    L = lattice_from_poset(_cap_with_top(cert.to_poset()))
    lcert = canonical_form(L)
    return lcert, lcert.to_lattice()


@lru_cache(maxsize=None)
def _lattice_certs(n: int) -> tuple[CanonicalCert, ...]:
    if n == 1:
        return (CanonicalCert(1, ()),)
    certs = {_lattice_of(c)[0] for c in _semilattice_certs(n - 1)}
    return tuple(sorted(certs))


def _check_size(n: int, max_size: int) -> None:
    if n < 1:
        raise ValueError(f"lattice size must be positive, got {n}")
    if n > max_size:
        raise ResourceError(f"size {n} exceeds the configured maximum {max_size}")


def lattice_certs(n: int, max_size: int = DEFAULT_MAX_SIZE) -> tuple[CanonicalCert, ...]:
    _check_size(n, max_size)
    return _lattice_certs(n)


def enumerate_lattices(n: int, max_size: int = DEFAULT_MAX_SIZE) -> Iterator[Lattice]:
    """Yield one canonical representative per isomorphism class, sorted by certificate."""
    for cert in lattice_certs(n, max_size):
        yield cert.to_lattice()


def lattices_up_to(max_n: int, min_n: int = 1, max_size: int = DEFAULT_MAX_SIZE) -> Iterator[Lattice]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_lattices(n, max_size)


# -- independent oracle -------------------------------------------------------


def _natural_strict_orders(n: int) -> Iterator[list[int]]:
    """All transitive strict orders whose relation matrix is upper triangular.

    Rows are chosen from the last element backwards; a row ``S`` for element
    ``i`` is admissible when it is closed under the rows already fixed.
    """
    rows = [0] * n

    def fill(i: int) -> Iterator[list[int]]:
        if i < 0:
            yield rows
            return
        higher = list(range(i + 1, n))
        for choice in range(1 << len(higher)):
            s = 0
            for k, j in enumerate(higher):
                if choice >> k & 1:
                    s |= 1 << j
            if all(rows[j] & ~s == 0 for j in bits(s)):
                rows[i] = s
                yield from fill(i - 1)
        rows[i] = 0

    yield from fill(n - 1)


def oracle_enumerate(n: int) -> list[Lattice]:
    """Brute-force lattice list: every naturally labelled order, lattice filter, pairwise dedupe."""
    if n < 1:
        raise ValueError(f"lattice size must be positive, got {n}")
    if n > ORACLE_MAX_SIZE:
        raise ResourceError(f"the oracle is limited to n <= {ORACLE_MAX_SIZE}")
    return _dedupe(_oracle_candidates(n))


def _oracle_candidates(n: int) -> Iterator[Poset]:
    for strict in _natural_strict_orders(n):
        p = Poset(n, tuple(row | 1 << i for i, row in enumerate(strict)))
        if is_lattice(p).ok:
            yield p


def bounded_poset_enumerate(n: int) -> list[Lattice]:
    """Second brute-force route: adjoin a bottom and top to every naturally labelled order on ``n - 2`` elements."""
    if n <= 2:
        return oracle_enumerate(n)
    if n > DEFAULT_MAX_SIZE:
        raise ResourceError(f"size {n} exceeds {DEFAULT_MAX_SIZE}")
    mid = n - 2
    everything = (1 << n) - 1

    def candidates() -> Iterator[Poset]:
        for strict in _natural_strict_orders(mid):
            up = [everything]
            for i, row in enumerate(strict):
                up.append((row << 1) | 1 << (i + 1) | 1 << (n - 1))
            up.append(1 << (n - 1))
            p = Poset(n, tuple(up))
            if is_lattice(p).ok:
                yield p

    return _dedupe(candidates())


def _dedupe(posets: Iterable[Poset]) -> list[Lattice]:
    buckets: dict[tuple, list[Poset]] = {}
    for p in posets:
        key = (len(p.covers), tuple(sorted((p.up[x].bit_count(), p.down[x].bit_count()) for x in range(p.n))))
        reps = buckets.setdefault(key, [])
        if not any(brute_force_isomorphic(p, r) for r in reps):
            reps.append(p)
    return [lattice_from_poset(p) for reps in buckets.values() for p in reps]


# -- census -------------------------------------------------------------------


def doubly_irreducible_census(n: int, max_size: int = DEFAULT_MAX_SIZE) -> dict[int, int]:
    """Histogram of the number of doubly irreducible elements over all lattices of size ``n``."""
    hist: Counter[int] = Counter()
    for L in enumerate_lattices(n, max_size):
        hist[len(irreducible_profile(L).doubly_irr)] += 1
    return dict(sorted(hist.items()))


def count_lattices(sizes: Iterable[int], jobs: int = 1, max_size: int = DEFAULT_MAX_SIZE) -> dict[int, int]:
    sizes = list(sizes)
    for n in sizes:
        _check_size(n, max_size)
    if jobs <= 1:
        return {n: len(_lattice_certs(n)) for n in sizes}
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        counts = list(pool.map(_count_one, sizes))
    return dict(zip(sizes, counts))


def _count_one(n: int) -> int:
    return len(_lattice_certs(n))
