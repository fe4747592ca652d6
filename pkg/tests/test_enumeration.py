import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lattice_frankl.enumeration import (
    CanonicalCert,
    are_isomorphic,
    bounded_poset_enumerate,
    brute_force_isomorphic,
    brute_force_isomorphic_permutations,
    canonical_form,
    count_lattices,
    doubly_irreducible_census,
    enumerate_lattices,
    lattice_certs,
    oracle_enumerate,
)
from lattice_frankl.errors import ResourceError
from lattice_frankl.fixtures import all_fixtures, chain, fixture
from lattice_frankl.order import dual, is_lattice, relabel

from naive import NaiveOrder

COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53}


@pytest.mark.parametrize("n,count", sorted(COUNTS.items()))
def test_counts(n, count):
    assert len(list(enumerate_lattices(n))) == count


def test_count_eight():
    assert len(lattice_certs(8)) == 222


@pytest.mark.slow
def test_count_nine():
    assert len(lattice_certs(9)) == 1078


def test_parallel_counts_match():
    assert count_lattices(range(1, 8), jobs=2) == COUNTS


def test_resource_limit():
    with pytest.raises(ResourceError):
        list(enumerate_lattices(10))
    with pytest.raises(ResourceError):
        list(enumerate_lattices(6, max_size=5))
    with pytest.raises(ResourceError):
        oracle_enumerate(8)


@pytest.mark.parametrize("n", range(1, 8))
def test_emitted_lattices_are_canonical_and_sorted(n):
    certs = lattice_certs(n)
    assert list(certs) == sorted(set(certs))
    for cert, L in zip(certs, enumerate_lattices(n)):
        assert is_lattice(L.poset).ok
        assert canonical_form(L) == cert
        assert L.bottom == 0
        # independent check that the cover list really describes a lattice
        naive = NaiveOrder(L.n, L.covers)
        assert naive.is_lattice()


@pytest.mark.parametrize("n", range(1, 7))
def test_oracle_matches_generator(n):
    assert {canonical_form(L) for L in oracle_enumerate(n)} == set(lattice_certs(n))


def test_second_strategy_at_eight():
    certs = {canonical_form(L) for L in bounded_poset_enumerate(8)}
    assert len(certs) == 222
    assert certs == set(lattice_certs(8))


@pytest.mark.parametrize("n", range(1, 9))
def test_duality_closure(n):
    certs = lattice_certs(n)
    assert sorted(canonical_form(dual(c.to_lattice())) for c in certs) == sorted(certs)


def test_cert_examples():
    M3 = fixture("M3")
    for perm in itertools.permutations([1, 2, 3]):
        assert canonical_form(relabel(M3, [0, *perm, 4])) == canonical_form(M3)
    assert canonical_form(fixture("C3")) == CanonicalCert(3, ((0, 1), (1, 2)))
    assert canonical_form(fixture("N5")) != canonical_form(M3)


def test_isomorphism_examples():
    assert are_isomorphic(fixture("B2"), dual(fixture("B2")))
    assert not are_isomorphic(fixture("M3"), fixture("N5"))
    assert not brute_force_isomorphic(fixture("M3"), fixture("N5"))


@pytest.mark.parametrize("n", range(1, 7))
def test_certificates_agree_with_permutation_search(n):
    lattices = list(enumerate_lattices(n))
    rng = random.Random(n)
    for a, b in itertools.combinations_with_replacement(lattices, 2):
        perm = list(range(n))
        rng.shuffle(perm)
        b2 = relabel(b, perm)
        expected = brute_force_isomorphic_permutations(a, b2)
        assert are_isomorphic(a, b2) == expected == brute_force_isomorphic(a, b2)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([c for n in range(2, 9) for c in lattice_certs(n)]), st.randoms(use_true_random=False))
def test_relabel_invariance(cert, rnd):
    L = cert.to_lattice()
    perm = list(range(L.n))
    rnd.shuffle(perm)
    assert canonical_form(relabel(L, perm)) == cert


def test_fixture_certs_are_enumerated():
    for name, L in all_fixtures().items():
        assert canonical_form(L) in set(lattice_certs(L.n)), name


@pytest.mark.parametrize("n,hist", [
    (1, {0: 1}),
    (3, {1: 1}),
    (4, {2: 2}),
    (5, {2: 2, 3: 3}),
    (6, {2: 2, 3: 8, 4: 5}),
    (7, {2: 4, 3: 17, 4: 25, 5: 7}),
])
def test_census(n, hist):
    assert doubly_irreducible_census(n) == hist


def test_census_at_eight_goes_below_two():
    hist = doubly_irreducible_census(8)
    assert sum(hist.values()) == 222
    assert min(hist) == 0


def test_chain_cert():
    for n in range(1, 9):
        assert canonical_form(chain(n)).covers == tuple((i, i + 1) for i in range(n - 1))


def _digraph(L):
    g = nx.DiGraph()
    g.add_nodes_from(range(L.n))
    g.add_edges_from(L.covers)
    return g


@pytest.mark.parametrize("n", range(2, 8))
def test_pairwise_non_isomorphic_by_networkx(n):
    graphs = [_digraph(L) for L in enumerate_lattices(n)]
    for g, h in itertools.combinations(graphs, 2):
        assert not nx.is_isomorphic(g, h)
