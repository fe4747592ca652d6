"""Exhaustive sweeps over enumerated lattices, shared by ``verify`` and the test suite."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .conditions import incomparable_pair_violations, rival_inequality
from .enumeration import (
    ORACLE_MAX_SIZE,
    canonical_form,
    doubly_irreducible_census,
    enumerate_lattices,
    lattice_certs,
    oracle_enumerate,
)
from .frankl import counterexample_sweep
from .order import irreducible_profile
from .removal import (
    irreducible_pair_failures,
    new_join_irreducibles_cover_removed,
    remove_in_order,
    remove_irreducible_set,
    removal_lattice_iff_irreducible,
    upset_bookkeeping_holds,
)

PUBLISHED_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    passed, detail = fn()
    return CheckResult(name, passed, detail, time.perf_counter() - start)


def _per_size(fn: Callable[[int], list], sizes: range, jobs: int) -> list:
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(fn, sizes))
    else:
        parts = [fn(n) for n in sizes]
    return [item for part in parts for item in part]


def _removal_equivalence_size(n: int) -> list[tuple[str, int, int, bool, bool]]:
    rows = []
    for L in enumerate_lattices(n):
        cert = canonical_form(L)
        for x in range(L.n):
            r = removal_lattice_iff_irreducible(L, x)
            rows.append((str(cert.covers), n, x, r.agree, r.readings_disagree))
    return rows


def removal_equivalence_sweep(max_n: int, jobs: int = 1) -> dict:
    """Single-element removal equivalence for every element of every lattice with ``2 <= n <= max_n``.

    Also counts elements where counting the bottom and top as irreducible
    unconditionally would change the irreducibility side of the equivalence.
    """
    rows = _per_size(_removal_equivalence_size, range(2, max_n + 1), jobs)
    return {
        "checked": len(rows),
        "disagreements": [(cert, x) for cert, _, x, agree, _ in rows if not agree],
        "reading_flags": sorted({(n, cert) for cert, n, _, _, flag in rows if flag}),
    }


def _irreducible_pair_size(n: int) -> list:
    out = []
    for L in enumerate_lattices(n):
        for failure in irreducible_pair_failures(L):
            out.append((canonical_form(L).covers, failure))
    return out


def irreducible_pair_sweep(max_n: int, jobs: int = 1) -> list:
    return _per_size(_irreducible_pair_size, range(1, max_n + 1), jobs)


def _cover_removed_size(n: int) -> list:
    out = []
    for L in enumerate_lattices(n):
        prof = irreducible_profile(L)
        for x in sorted(prof.join_irr | prof.meet_irr):
            if not new_join_irreducibles_cover_removed(L, x):
                out.append((canonical_form(L).covers, x))
        for j in sorted(prof.join_irr):
            if not upset_bookkeeping_holds(L, j):
                out.append((canonical_form(L).covers, ("bookkeeping", j)))
    return out


def cover_removed_sweep(max_n: int, jobs: int = 1) -> list:
    return _per_size(_cover_removed_size, range(2, max_n + 1), jobs)


def _canonical_result(result) -> tuple:
    return result.new_to_old, result.lattice.poset.up


def set_removal_trials(max_n: int, trials: int = 1000, seed: int = 0, orders: int = 3) -> list:
    """Random irreducible sets removed at once and in ``orders`` random sequences.

    Returns the trials whose results differ (should be empty).
    """
    rng = random.Random(seed)
    pool = [L for n in range(2, max_n + 1) for L in enumerate_lattices(n)]
    bad = []
    for t in range(trials):
        L = rng.choice(pool)
        mode = rng.choice(("join", "meet"))
        prof = irreducible_profile(L)
        members = sorted(prof.join_irr if mode == "join" else prof.meet_irr)
        chosen = [x for x in members if rng.random() < 0.5]
        reference = _canonical_result(remove_irreducible_set(L, chosen, mode))
        for _ in range(orders):
            seq = chosen[:]
            rng.shuffle(seq)
            if _canonical_result(remove_in_order(L, seq, mode)) != reference:
                bad.append((t, canonical_form(L).covers, mode, seq))
                break
    return bad


def _rival_size(n: int) -> list:
    out = []
    for L in enumerate_lattices(n):
        if not rival_inequality(L, "rival").holds:
            out.append(canonical_form(L).covers)
    return out


def rival_sweep(max_n: int, jobs: int = 1) -> list:
    return _per_size(_rival_size, range(1, max_n + 1), jobs)


def _incomparable_pair_size(n: int) -> list:
    out = []
    for L in enumerate_lattices(n):
        for x in incomparable_pair_violations(L):
            out.append((canonical_form(L).covers, x))
    return out


def incomparable_pair_sweep(max_n: int, jobs: int = 1) -> list:
    return _per_size(_incomparable_pair_size, range(3, max_n + 1), jobs)


def census_minima(lo: int, hi: int) -> dict[int, int]:
    """Smallest doubly-irreducible count for each size in ``lo..hi``."""
    return {n: min(doubly_irreducible_census(n)) for n in range(lo, hi + 1)}


def oracle_mismatches(max_n: int) -> list[int]:
    bad = []
    for n in range(1, max_n + 1):
        oracle = {canonical_form(L) for L in oracle_enumerate(n)}
        if oracle != set(lattice_certs(n)):
            bad.append(n)
    return bad


def run_verify(max_size: int, oracle: bool = False, jobs: int = 1, trials: int = 1000, seed: int = 0) -> list[CheckResult]:
    results = []

    def counts():
        got = {n: len(lattice_certs(n)) for n in range(1, max_size + 1)}
        expected = {n: c for n, c in PUBLISHED_COUNTS.items() if n <= max_size}
        ok = all(got[n] == c for n, c in expected.items())
        return ok, "counts " + ",".join(str(got[n]) for n in sorted(got))

    results.append(_timed("enumeration-counts", counts))

    def conjecture():
        if max_size < 2:
            return True, "nothing to check below size 2"
        rep = counterexample_sweep(max_size, jobs=jobs)
        text = f"{sum(rep.counts.values())} lattices, {rep.counterexamples} counterexamples"
        if rep.counterexamples == 0:
            text += f"; minimum counterexample size > {max_size}"
        return rep.counterexamples == 0, text

    results.append(_timed("conjecture-sweep", conjecture))

    def removal_iff():
        r = removal_equivalence_sweep(max_size, jobs)
        return not r["disagreements"], (
            f"{r['checked']} (lattice, element) pairs, {len(r['disagreements'])} disagreements, "
            f"{len(r['reading_flags'])} lattices where the extremal readings differ"
        )

    results.append(_timed("removal-iff-irreducible", removal_iff))

    def pairs():
        bad = irreducible_pair_sweep(max_size, jobs)
        return not bad, f"{len(bad)} irreducibility losses"

    results.append(_timed("irreducible-pairs", pairs))

    def set_removal():
        if max_size < 2:
            return True, "nothing to remove below size 2"
        bad = set_removal_trials(min(max_size, 7), trials, seed)
        return not bad, f"{trials} randomized removals, {len(bad)} order-dependent"

    results.append(_timed("irreducible-set-removal", set_removal))

    def covers():
        bad = cover_removed_sweep(max_size, jobs)
        return not bad, f"{len(bad)} violations"

    results.append(_timed("promoted-elements-cover-removed", covers))

    def rival():
        bad = rival_sweep(max_size, jobs)
        return not bad, f"{len(bad)} lattices violating the length bound"

    results.append(_timed("rival-inequality", rival))

    def census():
        hi = min(max_size, 7)
        if hi < 4:
            return True, "no sizes in 4..7 requested"
        minima = census_minima(4, hi)
        text = ", ".join(f"n={n}: min {m}" for n, m in minima.items())
        return all(m >= 2 for m in minima.values()), text

    results.append(_timed("doubly-irreducible-census", census))

    def incomparable():
        bad = incomparable_pair_sweep(max_size, jobs)
        return not bad, f"{len(bad)} violations"

    results.append(_timed("incomparable-pair-logic", incomparable))

    if oracle:
        def oracle_check():
            hi = min(max_size, ORACLE_MAX_SIZE)
            bad = oracle_mismatches(hi)
            return not bad, f"oracle equals generator for n=1..{hi}" if not bad else f"mismatch at {bad}"

        results.append(_timed("oracle-equality", oracle_check))
    return results

