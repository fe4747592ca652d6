import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lattice_frankl.enumeration import are_isomorphic, enumerate_lattices
from lattice_frankl.errors import CycleError, EmptySetError, NotALatticeError, RangeError, RedundantCoverError
from lattice_frankl.fixtures import DD_M, chain, fixture
from lattice_frankl.order import (
    dual,
    down_set,
    incomparables,
    induced_subposet,
    irreducible_profile,
    is_chain,
    is_disjoint_union_of_chains,
    is_lattice,
    join,
    lattice_from_poset,
    length,
    meet,
    poset_from_covers,
    poset_from_leq,
    relabel,
    remove_elements,
    up_set,
)

from naive import FIXTURES, NaiveOrder

SMALL = [L for n in range(1, 8) for L in enumerate_lattices(n)]


def test_c2_closure():
    p = poset_from_covers(2, [(0, 1)])
    pairs = {(x, y) for x in range(2) for y in range(2) if p.leq(x, y)}
    assert pairs == {(0, 0), (1, 1), (0, 1)}


def test_m3_closure():
    p = fixture("M3").poset
    assert all(p.leq(0, y) for y in range(5))
    for a, b in itertools.permutations([1, 2, 3], 2):
        assert not p.comparable(a, b)


@pytest.mark.parametrize("covers,exc", [
    ([(0, 1), (1, 0)], CycleError),
    ([(0, 2)], RangeError),
    ([(0, 0)], CycleError),
])
def test_bad_covers(covers, exc):
    with pytest.raises(exc):
        poset_from_covers(2, covers)


def test_redundant_cover_rejected():
    with pytest.raises(RedundantCoverError) as info:
        poset_from_covers(3, [(0, 1), (1, 2), (0, 2)])
    assert info.value.pair == (0, 2)
    assert poset_from_covers(3, [(0, 1), (1, 2), (0, 2)], strict=False).covers == ((0, 1), (1, 2))


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_closure_matches_reachability(name):
    n, covers = FIXTURES[name]
    naive = NaiveOrder(n, covers)
    p = fixture(name).poset
    assert [list(r) for r in p.matrix] == naive.leq
    assert p.covers == tuple(sorted(covers))


@pytest.mark.parametrize("L", SMALL, ids=lambda L: f"n{L.n}")
def test_reduction_round_trip(L):
    again = poset_from_covers(L.n, L.covers)
    assert again == L.poset
    assert poset_from_leq(L.poset.matrix) == L.poset


def test_is_lattice_examples():
    assert is_lattice(fixture("M3").poset).ok
    assert is_lattice(poset_from_covers(1, [])).ok
    rest = remove_elements(fixture("DD"), [DD_M])
    check = is_lattice(rest.poset)
    assert not check.ok
    a, b = (rest.new_to_old[i] for i in check.witness)
    assert (a, b) == (1, 2) and check.missing == "join"
    with pytest.raises(NotALatticeError):
        lattice_from_poset(rest.poset)


def test_b2_and_c3_tables():
    B2 = fixture("B2")
    assert join(B2, 1, 2) == 3 and meet(B2, 1, 2) == 0
    C3 = fixture("C3")
    assert all(C3.join_table[x][y] == max(x, y) for x in range(3) for y in range(3))
    assert join(fixture("M3"), 1, 2) == 4
    assert meet(fixture("N5"), 2, 3) == 0


@pytest.mark.parametrize("name", ["B2", "M3", "N5", "B3", "DD", "MIX8"])
def test_join_meet_match_brute_force(name):
    n, covers = FIXTURES[name]
    naive = NaiveOrder(n, covers)
    L = fixture(name)
    for x in range(n):
        for y in range(n):
            assert L.join(x, y) == naive.join(x, y)
            assert L.meet(x, y) == naive.meet(x, y)


@pytest.mark.parametrize("L", SMALL, ids=lambda L: f"n{L.n}")
def test_lattice_algebra(L):
    r = range(L.n)
    for x in r:
        assert L.join(x, x) == x == L.meet(x, x)
        for y in r:
            assert L.join(x, y) == L.join(y, x)
            assert L.join(x, L.meet(x, y)) == x
            assert L.meet(x, L.join(x, y)) == x
            assert L.leq(x, y) == (L.join(x, y) == y) == (L.meet(x, y) == x)
            for z in r:
                assert L.join(L.join(x, y), z) == L.join(x, L.join(y, z))
                assert L.meet(L.meet(x, y), z) == L.meet(x, L.meet(y, z))
                if L.leq(x, y):
                    assert L.leq(L.join(x, z), L.join(y, z))
                    assert L.leq(L.meet(x, z), L.meet(y, z))


@pytest.mark.parametrize("L", SMALL, ids=lambda L: f"n{L.n}")
def test_up_down_incomparable_partition(L):
    for x in range(L.n):
        up, down, inc = up_set(L, x), down_set(L, x), incomparables(L, x)
        assert len(up) + len(down) + len(inc) == L.n + 1
        assert up & down == {x}
        assert not inc & (up | down)


def test_set_examples():
    assert up_set(fixture("M3"), 1) == {1, 4}
    assert up_set(fixture("B3"), 7) == {7}
    assert incomparables(fixture("N5"), 3) == {1, 2}


def test_profile_examples():
    p = irreducible_profile(fixture("M3"))
    assert p.join_irr == p.meet_irr == p.doubly_irr == {1, 2, 3}
    assert p.doubly_red == frozenset()
    p = irreducible_profile(fixture("DD"))
    assert p.doubly_red == {3}
    assert p.doubly_irr == {1, 2, 4, 5}
    assert irreducible_profile(fixture("C2"), "rival").doubly_irr == {0, 1}


def test_cover_counting_on_chain_extremes():
    p = irreducible_profile(fixture("C3"))
    assert 0 in p.meet_irr and 0 not in p.join_irr
    assert 2 in p.join_irr and 2 not in p.meet_irr
    r = irreducible_profile(fixture("C3"), "rival")
    assert r.doubly_irr == {0, 1, 2}


@pytest.mark.parametrize("name,expected", [("C3", 2), ("M3", 2), ("B3", 3), ("DD", 4), ("C2", 1)])
def test_length(name, expected):
    assert length(fixture(name)) == expected


def test_length_of_chains():
    for n in range(1, 9):
        assert length(chain(n)) == n - 1


def test_induced_subposet():
    M3 = fixture("M3")
    rest = induced_subposet(M3, {0, 1, 4})
    assert rest.poset.covers == ((0, 1), (1, 2))
    assert rest.new_to_old == (0, 1, 4)
    assert induced_subposet(M3, range(5)).poset == M3.poset
    with pytest.raises(EmptySetError):
        induced_subposet(M3, [])


def test_induced_covers_come_from_the_order():
    # 0 < 2 is not a cover in C3 but becomes one once 1 is gone
    rest = induced_subposet(fixture("C3"), {0, 2})
    assert rest.poset.covers == ((0, 1),)


def test_dual_examples():
    C3 = fixture("C3")
    assert are_isomorphic(dual(C3), C3)
    N5 = fixture("N5")
    assert irreducible_profile(dual(N5)).join_irr == irreducible_profile(N5).meet_irr
    for L in SMALL:
        assert dual(dual(L)) == L
        D = dual(L)
        assert (D.bottom, D.top) == (L.top, L.bottom)


def test_chain_checks():
    M3 = fixture("M3")
    assert not is_chain(M3, {1, 2})
    assert is_chain(M3, {0, 1, 4})
    assert is_chain(M3, set())
    assert not is_chain(M3, set(), treat_empty_as_chain=False)


def test_disjoint_union_of_chains():
    assert tuple(is_disjoint_union_of_chains(fixture("M3"), {2, 3})) == (True, 2)
    assert not is_disjoint_union_of_chains(fixture("B3"), {2, 4, 6}).ok
    assert tuple(is_disjoint_union_of_chains(fixture("M3"), set())) == (True, 0)


def test_up_set_is_a_sublattice():
    for L in SMALL:
        for x in range(L.n):
            up = up_set(L, x)
            assert all(L.join(a, b) in up and L.meet(a, b) in up for a in up for b in up)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.randoms(use_true_random=False))
def test_relabel_preserves_structure(L, rnd):
    perm = list(range(L.n))
    rnd.shuffle(perm)
    R = relabel(L, perm)
    assert length(R) == length(L)
    for x in range(L.n):
        for y in range(L.n):
            assert R.leq(perm[x], perm[y]) == L.leq(x, y)
            assert R.join(perm[x], perm[y]) == perm[L.join(x, y)]
    p, q = irreducible_profile(L), irreducible_profile(R)
    assert {perm[x] for x in p.join_irr} == q.join_irr
    assert {perm[x] for x in p.meet_irr} == q.meet_irr
