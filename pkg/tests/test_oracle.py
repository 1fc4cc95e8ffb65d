import random

import pytest

import naive
from dihedral_census.cycles import c_total
from dihedral_census.dihedral import Aut, enumerate_aut, make_aut, to_permutation
from dihedral_census.errors import TooLarge
from dihedral_census.oracle import (
    MASK_BITS_ENV,
    SubsetAction,
    cycle_count_via_fixpoints,
    cycle_data_from_permutation,
    max_mask_bits,
    oracle_burnside_sum,
    perm_cycle_count,
    perm_order,
    powerset_orbit_count,
)

# orbit counts from the frozenset enumeration in naive.orbit_count
ORBITS = {3: 12, 4: 36, 5: 44, 6: 272, 7: 248}


def test_perm_cycle_count_examples():
    assert perm_cycle_count(to_permutation(Aut.identity(15))) == 29
    assert perm_cycle_count(to_permutation(make_aut(3, 1, 1))) == 3
    assert perm_cycle_count(to_permutation(make_aut(15, 4, 5))) == 11


@pytest.mark.parametrize("a,expected", [(Aut.identity(15), 29), (Aut(15, 4, 5), 11), (Aut(5, 2, 0), 3)])
def test_cycle_count_via_fixpoints_examples(a, expected):
    assert cycle_count_via_fixpoints(a) == expected


def test_three_way_cycle_agreement_up_to_35():
    for n in range(2, 36):
        for a in enumerate_aut(n):
            count = perm_cycle_count(to_permutation(a))
            assert count == c_total(n, a.r, a.t).total
            assert count == cycle_count_via_fixpoints(a)


def test_cycle_data_from_permutation_blocks():
    u_parts, c_v = cycle_data_from_permutation(make_aut(15, 4, 5))
    assert u_parts == {3: 2, 5: 2, 15: 4} and c_v == 3


def test_perm_order():
    assert perm_order(to_permutation(make_aut(15, 4, 5))) == 6


def test_naive_orbit_counts():
    for n in (3, 5):
        assert naive.orbit_count(n) == ORBITS[n]


@pytest.mark.parametrize("n", sorted(ORBITS))
@pytest.mark.parametrize("strategy", ["visited", "minimum"])
def test_powerset_orbit_count(n, strategy):
    assert powerset_orbit_count(n, strategy=strategy) == ORBITS[n]


def test_powerset_orbit_count_matches_burnside_sum():
    for n in range(2, 9):
        count = powerset_orbit_count(n)
        assert count * len(enumerate_aut(n)) == oracle_burnside_sum(n) == naive.burnside_sum(n)


def test_width_limit(monkeypatch):
    with pytest.raises(TooLarge):
        powerset_orbit_count(7, max_bits=12)
    monkeypatch.setenv(MASK_BITS_ENV, "9")
    assert max_mask_bits() == 9
    with pytest.raises(TooLarge):
        powerset_orbit_count(6)
    assert powerset_orbit_count(5) == 44


def test_default_width_limit(monkeypatch):
    monkeypatch.delenv(MASK_BITS_ENV, raising=False)
    assert max_mask_bits() == 25
    with pytest.raises(TooLarge):
        powerset_orbit_count(14)


def test_orbit_stabilizer_at_n5():
    action = SubsetAction(5)
    rng = random.Random(20261019)
    for _ in range(100):
        mask = rng.randrange(1 << action.width)
        assert len(action.orbit(mask)) * action.stabilizer_order(mask) == 20


def test_subset_image_matches_bitwise_gather():
    action = SubsetAction(6)
    rng = random.Random(1)
    for _ in range(200):
        mask = rng.randrange(1 << action.width)
        i = rng.randrange(len(action.perms))
        expected = sum(1 << action.perms[i][k] for k in range(action.width) if mask >> k & 1)
        assert action.image(i, mask) == expected
