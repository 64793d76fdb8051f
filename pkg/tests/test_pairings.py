import itertools

import pytest
from hypothesis import given, settings, strategies as st

from zonalkit.pairings import (
    CapacityError,
    PairPartition,
    apply_permutation,
    canonical_couple,
    compatible_orientations,
    compose,
    couples_of_type_count,
    cycle_type,
    double_factorial,
    enumerate_pair_partitions,
    first_pair_partition,
    is_transitive_triplet,
    loop_structure,
    make_pair_partition,
    orientation_orbits,
    triplet_graph,
)
from zonalkit.partitions import partitions_of


def pp(*pairs):
    return make_pair_partition(pairs)


@pytest.mark.parametrize("pairs, partner", [
    ([(1, 2), (3, 4)], (2, 1, 4, 3)),
    ([(1, 3), (2, 4)], (3, 4, 1, 2)),
])
def test_make_pair_partition(pairs, partner):
    assert make_pair_partition(pairs).partner == partner


@pytest.mark.parametrize("pairs, message", [
    ([(1, 1)], "label 1"),
    ([(1, 2), (2, 3)], "label 2"),
    ([(1, 2), (3,)], "not a pair"),
    ([(1, 2), (4, 5)], "label 3"),
])
def test_make_pair_partition_errors(pairs, message):
    with pytest.raises(ValueError, match=message):
        make_pair_partition(pairs)


def test_partner_table_validation():
    with pytest.raises(ValueError):
        PairPartition((2, 1, 3))
    with pytest.raises(ValueError):
        PairPartition((2, 3, 1, 4))


def test_json_round_trip():
    s = pp((1, 3), (2, 4))
    assert s.to_json() == "[[1, 3], [2, 4]]"
    assert PairPartition.from_json(s.to_json()) == s


@pytest.mark.parametrize("k, pairs", [
    (1, [(1, 2)]),
    (2, [(1, 2), (3, 4)]),
    (3, [(1, 2), (3, 4), (5, 6)]),
])
def test_first_pair_partition(k, pairs):
    assert first_pair_partition(k).pairs() == pairs


@pytest.mark.parametrize("k", range(1, 7))
def test_enumeration_count(k):
    found = list(enumerate_pair_partitions(k))
    assert len(found) == double_factorial(2 * k - 1)
    assert len(set(found)) == len(found)


def test_enumeration_order_and_capacity():
    assert [s.pairs() for s in enumerate_pair_partitions(2)] == [
        [(1, 2), (3, 4)], [(1, 3), (2, 4)], [(1, 4), (2, 3)]]
    with pytest.raises(CapacityError):
        list(enumerate_pair_partitions(9))


def test_loop_structure_examples():
    ls = loop_structure(pp((1, 2), (3, 4), (5, 6)), pp((1, 3), (2, 4), (5, 6)))
    assert ls.type == (2, 1) and ls.sign == -1
    ls = loop_structure(pp((1, 2), (3, 4)), pp((1, 4), (2, 3)))
    assert ls.type == (2,) and ls.sign == -1
    assert ls.loops == ((1, 2, 3, 4),)
    s = pp((1, 4), (2, 5), (3, 6))
    assert loop_structure(s, s).type == (1, 1, 1)
    assert loop_structure(s, s).sign == 1


pairs_k4 = list(enumerate_pair_partitions(4))


@given(st.integers(1, 5), st.randoms(use_true_random=False))
def test_loop_structure_invariants(k, rnd):
    everything = list(enumerate_pair_partitions(k))
    a, b = rnd.choice(everything), rnd.choice(everything)
    ab, ba = loop_structure(a, b), loop_structure(b, a)
    assert ab.type == ba.type and ab.sign == ba.sign
    assert sorted(x for loop in ab.loops for x in loop) == list(range(1, 2 * k + 1))
    assert all(len(loop) % 2 == 0 for loop in ab.loops)
    assert ab.type.size == k
    assert ab.sign == (-1) ** (k - len(ab.loops))


@pytest.mark.parametrize("k", range(1, 5))
def test_composition_has_doubled_cycle_type(k):
    everything = list(enumerate_pair_partitions(k))
    for a, b in itertools.product(everything, repeat=2):
        t = loop_structure(a, b).type
        assert cycle_type(compose(a, b)) == t.union(t)


@pytest.mark.parametrize("mu, s1, s2", [
    ((2,), [(1, 2), (3, 4)], [(1, 4), (2, 3)]),
    ((1,), [(1, 2)], [(1, 2)]),
    ((2, 1), [(1, 2), (3, 4), (5, 6)], [(1, 4), (2, 3), (5, 6)]),
])
def test_canonical_couple(mu, s1, s2):
    a, b = canonical_couple(mu)
    assert a.pairs() == s1 and b.pairs() == s2
    assert loop_structure(a, b).type == mu


def test_canonical_couple_rejects_empty():
    with pytest.raises(ValueError):
        canonical_couple(())


@pytest.mark.parametrize("mu, count", [((2,), 6), ((1,), 1), ((1, 1), 3)])
def test_couples_of_type_examples(mu, count):
    assert couples_of_type_count(mu) == count


@pytest.mark.parametrize("n", range(1, 5))
def test_couples_of_type_count_exhaustive(n):
    everything = list(enumerate_pair_partitions(n))
    observed = {}
    for a, b in itertools.product(everything, repeat=2):
        t = loop_structure(a, b).type
        observed[t] = observed.get(t, 0) + 1
    assert observed == {mu: couples_of_type_count(mu) for mu in partitions_of(n)}
    assert sum(couples_of_type_count(mu) for mu in partitions_of(n)) == double_factorial(2 * n - 1) ** 2


def test_apply_permutation_examples():
    s = pp((1, 2), (3, 4))
    assert apply_permutation((1, 2, 3, 4), s) == s
    assert apply_permutation((3, 2, 1, 4), s) == pp((2, 3), (1, 4))
    with pytest.raises(ValueError):
        apply_permutation((1, 2), s)


@settings(max_examples=100)
@given(st.integers(1, 5), st.randoms(use_true_random=False))
def test_diagonal_action_preserves_type(k, rnd):
    everything = list(enumerate_pair_partitions(k))
    a, b = rnd.choice(everything), rnd.choice(everything)
    sigma = list(range(1, 2 * k + 1))
    rnd.shuffle(sigma)
    assert loop_structure(apply_permutation(sigma, a), apply_permutation(sigma, b)).type == \
        loop_structure(a, b).type


def test_triplet_graph_examples():
    one = pp((1, 2))
    g = triplet_graph(one, one, one)
    assert (len(g.black), len(g.white), len(g.edges)) == (1, 1, 1) and g.is_connected()
    s1, s2 = canonical_couple((2,))
    g = triplet_graph(s1, s1, s2)
    assert (len(g.black), len(g.white), len(g.edges)) == (2, 1, 2)
    g = triplet_graph(pp((1, 3), (2, 4)), s1, s2)
    assert (len(g.black), len(g.white), len(g.edges)) == (1, 1, 1)


def test_triplet_graph_has_no_isolated_vertices():
    for s0, s1, s2 in itertools.product(list(enumerate_pair_partitions(3)), repeat=3):
        g = triplet_graph(s0, s1, s2)
        assert {b for b, _ in g.edges} == set(range(len(g.black)))
        assert {w for _, w in g.edges} == set(range(len(g.white)))


def _orbit_of_one(*involutions):
    seen, stack = {1}, [1]
    while stack:
        x = stack.pop()
        for s in involutions:
            y = s(x)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def test_transitivity_matches_group_orbit():
    everything = list(enumerate_pair_partitions(3))
    for s0, s1, s2 in itertools.product(everything, repeat=3):
        assert is_transitive_triplet(s0, s1, s2) == (len(_orbit_of_one(s0, s1, s2)) == 6)


def test_transitivity_examples():
    one = pp((1, 2))
    assert is_transitive_triplet(one, one, one)
    two = pp((1, 2), (3, 4))
    assert not is_transitive_triplet(two, two, two)
    s1, s2 = canonical_couple((2,))
    assert is_transitive_triplet(s2, s1, s2)


@pytest.mark.parametrize("s0, s1, count", [
    ([(1, 2)], [(1, 2)], 2),
    ([(1, 2), (3, 4)], [(1, 2), (3, 4)], 4),
    ([(1, 3), (2, 4)], [(1, 2), (3, 4)], 2),
])
def test_compatible_orientations(s0, s1, count):
    s0, s1 = make_pair_partition(s0), make_pair_partition(s1)
    found = compatible_orientations(s0, s1)
    assert len(found) == count == 2 ** len(loop_structure(s0, s1))
    assert len(set(found)) == count
    assert all(phi.is_compatible(s0, s1) for phi in found)


def test_orientation_orbits_small():
    assert len(orientation_orbits((1,))) == 1
    orbits = orientation_orbits((2,))
    s1, _ = canonical_couple((2,))
    total = sum(2 ** len(loop_structure(s0, s1)) for s0 in enumerate_pair_partitions(2))
    assert total == 8
    assert len(orbits) == total // 2 ** 1


@pytest.mark.parametrize("mu", [mu for n in range(1, 5) for mu in partitions_of(n)])
def test_orbits_are_free_and_cover(mu):
    s1, s2 = canonical_couple(mu)
    orbits = orientation_orbits(mu)
    members = [m for o in orbits for m in o.members]
    assert all(len(o.members) == 2 ** mu.length for o in orbits)
    assert len(set(members)) == len(members)
    assert len(members) == sum(2 ** len(loop_structure(s0, s1)) for s0 in enumerate_pair_partitions(mu.size))
    for s0, phi in members:
        assert phi.is_compatible(s0, s1)
    for o in orbits:
        assert {loop_structure(s0, s1).sign for s0, _ in o.members} == {o.sign}
