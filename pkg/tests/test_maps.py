import pytest

from zonalkit.maps import map_stats
from zonalkit.pairings import canonical_couple, enumerate_pair_partitions, make_pair_partition
from zonalkit.partitions import partitions_of


def test_sphere_for_mu_2():
    _, s2 = canonical_couple((2,))
    stats = map_stats((2,), s2)
    assert (stats.black, stats.white, stats.edges, stats.faces) == (1, 2, 2, 1)
    assert stats.euler_characteristic == 2 and stats.connected and stats.orientable


def test_projective_plane_for_mu_2():
    stats = map_stats((2,), make_pair_partition([(1, 3), (2, 4)]))
    assert (stats.black, stats.white, stats.edges, stats.faces) == (1, 1, 2, 1)
    assert stats.euler_characteristic == 1 and not stats.orientable


def test_single_edge():
    stats = map_stats((1,), make_pair_partition([(1, 2)]))
    assert (stats.black, stats.white, stats.edges, stats.faces) == (1, 1, 1, 1)
    assert stats.euler_characteristic == 2 and stats.orientable


def test_size_mismatch():
    with pytest.raises(ValueError):
        map_stats((2,), make_pair_partition([(1, 2)]))


def test_disconnected_gluing_adds_up():
    s1, _ = canonical_couple((1, 1))
    stats = map_stats((1, 1), s1)
    assert not stats.connected and stats.euler_characteristic == 4


@pytest.mark.parametrize("mu", [mu for n in range(1, 4) for mu in partitions_of(n)])
def test_surface_classification(mu):
    for s0 in enumerate_pair_partitions(mu.size):
        stats = map_stats(mu, s0)
        assert stats.faces == mu.length and stats.edges == mu.size
        if stats.connected:
            assert stats.euler_characteristic <= 2
            if stats.euler_characteristic == 2:
                assert stats.orientable
            if stats.euler_characteristic % 2:
                assert not stats.orientable


def test_to_dict():
    d = map_stats((1,), make_pair_partition([(1, 2)])).to_dict()
    assert set(d) == {"black", "white", "edges", "faces", "euler_characteristic", "connected", "orientable"}
