from math import gcd

import pytest

import naive
from dihedral_census.arith import divisors_of, euler_phi, is_squarefree
from dihedral_census.cycles import (
    CycleData,
    c_total,
    c_u_part,
    c_u_total,
    c_v_general,
    c_v_squarefree,
    fix_v_count,
)
from dihedral_census.errors import DomainError, SquareFreeRequired


def units(n):
    return [r for r in range(n) if gcd(r, n) == 1]


@pytest.mark.parametrize("n,d,r,expected", [(15, 5, 2, 1), (15, 3, 4, 2), (15, 15, 4, 4), (21, 7, 1, 6)])
def test_c_u_part_examples(n, d, r, expected):
    assert c_u_part(n, d, r) == expected


@pytest.mark.parametrize("d", [1, 4])
def test_c_u_part_rejects_bad_divisor(d):
    with pytest.raises(DomainError):
        c_u_part(15, d, 2)


@pytest.mark.parametrize("n,r,expected", [(15, 1, 14), (15, 4, 8), (15, 2, 4)])
def test_c_u_total_examples(n, r, expected):
    assert c_u_total(n, r) == expected


@pytest.mark.parametrize("n,r,t,s,expected", [(9, 1, 0, 1, 9), (15, 4, 5, 1, 0), (15, 4, 5, 3, 3)])
def test_fix_v_count_examples(n, r, t, s, expected):
    assert fix_v_count(n, r, t, s) == expected


def test_fix_v_count_matches_direct_count():
    for n in range(1, 30):
        for r in units(n):
            for t in range(n):
                for s in range(1, 8):
                    rs, ts = pow(r, s, n), t * sum(r**k for k in range(s)) % n
                    direct = sum(1 for j in range(n) if (rs * j + ts - j) % n == 0)
                    assert fix_v_count(n, r, t, s) == direct


@pytest.mark.parametrize("n,r,t,expected", [(8, 1, 0, 8), (3, 1, 1, 1), (15, 4, 5, 3), (9, 2, 0, 3)])
def test_c_v_general_examples(n, r, t, expected):
    assert c_v_general(n, r, t) == expected


def test_c_v_general_matches_cycle_tracing():
    for n in range(1, 36):
        for r in units(n):
            for t in range(n):
                refl = [("v", j) for j in range(n)]
                assert c_v_general(n, r, t) == len(naive.cycle_lengths(n, r, t, refl))


@pytest.mark.parametrize("n,r,t,expected", [(15, 4, 5, 3), (15, 1, 3, 3)])
def test_c_v_squarefree_examples(n, r, t, expected):
    assert c_v_squarefree(n, r, t) == expected


@pytest.mark.parametrize("n", [9, 12, 1])
def test_c_v_squarefree_needs_squarefree(n):
    with pytest.raises(SquareFreeRequired):
        c_v_squarefree(n, 2 if n > 1 else 0, 0)


def test_c_v_forms_agree_on_squarefree_up_to_105():
    for n in range(2, 106):
        if not is_squarefree(n):
            continue
        for r in units(n):
            for t in range(n):
                assert c_v_squarefree(n, r, t) == c_v_general(n, r, t), (n, r, t)


def test_c_v_depends_on_t_only_through_gcd():
    for n in range(1, 61):
        for r in units(n):
            by_class = {}
            for t in range(n):
                value = c_v_general(n, r, t)
                assert by_class.setdefault(gcd(t, n), value) == value


@pytest.mark.parametrize("n,r,t,total", [(15, 4, 5, 11), (15, 1, 0, 29), (7, 1, 0, 13), (3, 2, 1, 3)])
def test_c_total_examples(n, r, t, total):
    assert c_total(n, r, t).total == total


def test_c_total_breakdown_for_n3():
    data = c_total(3, 2, 1)
    assert data.u_parts == {3: 1} and data.c_v == 2


def test_c_total_against_permutation_up_to_35():
    for n in range(2, 36):
        for r in units(n):
            for t in range(n):
                data = c_total(n, r, t)
                assert data.total == len(naive.cycle_lengths(n, r, t)), (n, r, t)
                assert 1 <= data.total <= 2 * n - 1
                assert (data.total == 2 * n - 1) == (r == 1 % n and t == 0)


def test_rotation_blocks_do_not_depend_on_t():
    for n in range(2, 36):
        for r in units(n):
            for d in divisors_of(n)[1:]:
                block = [("u", n // d * i) for i in range(1, d) if gcd(i, d) == 1]
                counts = {len(naive.cycle_lengths(n, r, t, block)) for t in range(n)}
                assert counts == {c_u_part(n, d, r)}
                assert len(block) == euler_phi(d)


def test_cycle_data_round_trip():
    data = c_total(30, 7, 4)
    assert CycleData.from_dict(data.to_dict()) == data
    assert data.total == data.c_v + sum(data.u_parts.values())
