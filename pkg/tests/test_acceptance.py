"""Acceptance criteria 1-10, one test each.

Every test prints a single ``PASS``/``FAIL`` line (visible without ``-s``)
giving the measured value, the runtime and the time limit, then asserts.
"""

import json
import time

import pytest

from lattice_frankl import enumeration
from lattice_frankl.conditions import evaluate_all, rival_inequality
from lattice_frankl.enumeration import canonical_form, enumerate_lattices, lattice_certs, oracle_enumerate
from lattice_frankl.fixtures import DD_M, chain, fixture
from lattice_frankl.frankl import counterexample_sweep
from lattice_frankl.order import irreducible_profile, is_lattice, length, remove_elements
from lattice_frankl.removal import build_lemma_1_3_converse_example, build_mixed_removal_counterexample
from lattice_frankl.verify import incomparable_pair_sweep, census_minima, removal_equivalence_sweep, irreducible_pair_sweep, set_removal_trials

from naive import CONDITION_IDS, FIXTURES, GOLDEN, NaiveOrder, naive_conditions


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail, seconds=None, limit=None):
        timing = ""
        if seconds is not None:
            timing = f" [{seconds:.2f}s"
            timing += f" / limit {limit}s]" if limit is not None else "]"
            ok = ok and (limit is None or seconds < limit)
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number} ({title}): {detail}{timing}")
        return ok

    return emit


def clear_generator_caches():
    # so timings are not flattered by enumeration done in earlier tests
    enumeration._semilattice_certs.cache_clear()
    enumeration._lattice_certs.cache_clear()


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def test_criterion_01_enumeration_counts(report):
    expected = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53}
    clear_generator_caches()
    got, secs = timed(lambda: {n: sum(1 for _ in enumerate_lattices(n)) for n in expected})
    ok = report(1, "enumeration counts", got == expected, "counts " + ",".join(str(got[n]) for n in sorted(got)), secs, 10)
    assert ok


def test_criterion_02_oracle_equivalence(report):
    def compare():
        return [n for n in range(1, 8) if {canonical_form(L) for L in oracle_enumerate(n)} != set(lattice_certs(n))]

    bad, secs = timed(compare)
    detail = "oracle cert sets equal generator for n=1..7" if not bad else f"mismatch at n={bad}"
    assert report(2, "oracle equivalence", not bad, detail, secs, 300)


def test_criterion_03_conjecture_sweep(report):
    clear_generator_caches()
    rep, secs = timed(lambda: counterexample_sweep(8))
    ok = rep.counterexamples == 0 and rep.counts[8] == 222
    detail = (
        f"{sum(rep.counts.values())} lattices for 2<=n<=8 ({rep.counts[8]} at n=8), "
        f"{rep.counterexamples} counterexamples; minimum counterexample size > {rep.certified_min_size - 1}"
    )
    assert report(3, "conjecture sweep", ok, detail, secs, 300)


def test_criterion_04_doubly_irreducible_census(report):
    minima, secs = timed(lambda: census_minima(4, 7))
    ok = all(m >= 2 for m in minima.values())
    detail = ", ".join(f"n={n}: min {m}" for n, m in minima.items())
    assert report(4, "doubly-irreducible census", ok, detail, secs, 30)


def test_criterion_05_single_removal(report):
    result, secs = timed(lambda: removal_equivalence_sweep(7))
    ok = not result["disagreements"]
    detail = (
        f"{result['checked']} (lattice, element) pairs for n<=7, {len(result['disagreements'])} disagreements "
        f"(cover-counting reading; {len(result['reading_flags'])} lattices where the alternative extremal reading differs)"
    )
    assert report(5, "removal is a lattice iff irreducible", ok, detail, secs, 120)


def test_criterion_06_set_removal(report):
    def run():
        return irreducible_pair_sweep(6), set_removal_trials(7, trials=1000, seed=0)

    (pairs, trials), secs = timed(run)
    ok = not pairs and not trials
    detail = f"{len(pairs)} pair failures for n<=6; 1000 randomized removals, {len(trials)} order-dependent"
    assert report(6, "irreducible pairs and sets", ok, detail, secs, 120)


def test_criterion_07_rival_inequality(report):
    def run():
        bad = [canonical_form(L) for n in range(1, 8) for L in enumerate_lattices(n) if not rival_inequality(L, "rival").holds]
        tight = []
        for n in range(1, 10):
            C = chain(n)
            irr = len(irreducible_profile(C, "rival").doubly_irr)
            tight.append(C.n == 2 * (length(C) + 1) - irr)
        return bad, tight

    (bad, tight), secs = timed(run)
    ok = not bad and all(tight)
    detail = f"{len(bad)} lattices with n<=7 violate the bound; equality on chains of size 1..9: {all(tight)}"
    assert report(7, "length bound", ok, detail, secs, 60)


def test_criterion_08_fixture_goldens(report):
    mismatches = []
    for name in ["C3", "B2", "M3", "N5", "B3", "DD", "MIX8"]:
        golden = json.loads((GOLDEN / f"conditions_{name}.json").read_text())
        n, covers = FIXTURES[name]
        fresh = naive_conditions(NaiveOrder(n, covers))
        got = evaluate_all(fixture(name)).to_dict()["conditions"]
        for cid in CONDITION_IDS:
            frozen = golden["conditions"][cid]
            if (got[cid]["status"], got[cid]["witnesses"]) != (frozen["status"], frozen["witnesses"]):
                mismatches.append((name, cid, "package"))
            if [list(w) for w in fresh[cid]] != frozen["witnesses"]:
                mismatches.append((name, cid, "oracle"))
    detail = "7 fixtures x 18 conditions match the frozen oracle verdicts" if not mismatches else f"mismatches {mismatches}"
    assert report(8, "fixture golden files", not mismatches, detail)


def test_criterion_09_constructions(report):
    L, pair = build_mixed_removal_counterexample()
    mix_ok = not is_lattice(remove_elements(L, pair).poset).ok
    B2, removed, promoted = build_lemma_1_3_converse_example()
    rest = remove_elements(B2, [removed])
    conv_ok = B2.lower_covers[promoted].bit_count() == 2 and rest.poset.lower_covers[rest.old_to_new[promoted]].bit_count() == 1
    dd_ok = not is_lattice(remove_elements(fixture("DD"), [DD_M]).poset).ok
    ok = mix_ok and conv_ok and dd_ok
    detail = f"MIX8 minus {{j,m}} not a lattice: {mix_ok}; B2 converse failure: {conv_ok}; DD minus m not a lattice: {dd_ok}"
    assert report(9, "construction self-checks", ok, detail)


def test_criterion_10_incomparable_pair_logic(report):
    bad, secs = timed(lambda: incomparable_pair_sweep(7))
    detail = f"{len(bad)} violations over interior elements of every lattice with n<=7"
    assert report(10, "incomparable-pair logic", not bad, detail, secs, 120)
