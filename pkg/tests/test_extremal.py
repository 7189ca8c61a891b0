import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grassvanish.admissible import is_admissible
from grassvanish.extremal import (
    FamilyParams,
    a_instances,
    a_sequence,
    b_instances,
    brute_pmax,
    canonical,
    check_params,
    climb,
    euclid_holds,
    family_first_part,
    family_params,
    family_partition,
    flatten,
    hat_first,
    hat_weight,
    maximize,
    parse_family,
    transform_A,
    transform_B,
)
from grassvanish.admissible import hat
from grassvanish.partitions import enumerate_box


def test_flatten_example():
    assert a_sequence((3, 2, 2, 1, 1, 1), 5, 6) == [1, 3, 6, 7]
    assert flatten((3, 2, 2, 1, 1, 1), 5, 6) == (3, 3, 2, 2, 2, 1)


def test_transform_A_example():
    assert transform_A((3, 3, 1, 1, 1), 0, 3, 1, 5, 5) == (2, 2, 2, 2, 2)
    assert hat_weight((2, 2, 2, 2, 2), 5, 5) - hat_weight((3, 3, 1, 1, 1), 5, 5) == 3


def test_transform_B_example():
    assert transform_B((4, 3, 3, 1, 1), 0, 3, 1, 1, 5, 5) == (3, 3, 3, 2, 2)
    assert hat_weight((3, 3, 3, 2, 2), 5, 5) - hat_weight((4, 3, 3, 1, 1), 5, 5) == 4


def test_transforms_reject_mismatch():
    with pytest.raises(ValueError):
        transform_A((3, 2, 1, 1, 1), 0, 3, 1, 5, 5)
    with pytest.raises(ValueError):
        transform_B((3, 2, 2, 0), 0, 2, 0, 1, 4, 4)


@pytest.mark.parametrize("r, l", [(r, l) for r in range(1, 7) for l in range(2, 6)])
def test_transform_gains(r, l):
    for nu in enumerate_box(r, l - 1):
        w, first = hat_weight(nu, l, r), hat_first(nu, l, r)
        for _, a, _, new in a_instances(nu, l, r):
            assert hat_weight(new, l, r) - w >= l - a + 1
            assert hat_first(new, l, r) == first
        for _, a, _, _, new in b_instances(nu, l, r):
            assert hat_weight(new, l, r) - w >= 2 * (l - a)
            assert hat_first(new, l, r) == first


def test_family_partition_and_first_part():
    params = FamilyParams(2, 1, 1, 1, 1)
    assert family_partition(params, 4) == (2, 2, 1, 1, 1, 1)
    assert family_first_part(params, 4, 7) == 4 == hat((2, 2, 1, 1, 1, 1), 4, 7)[0]


def test_canonical():
    assert canonical((2, 0, 0, 1, 0), 4) == (0, 0, 0, 0, 0)
    assert canonical((2, 1, 0, 0, 0), 4, 3) == (2, 1, 0, 0, 1)


@pytest.mark.parametrize(
    "params", [(-1, 0, 0, 0, 0), (4, 1, 0, 0, 0), (2, 1, 0, 3, 1), (2, 1, 0, 1, 3), (2, 1, 0, 2, 2)]
)
def test_check_params_rejects(params):
    with pytest.raises(ValueError):
        check_params(params, 4)


def test_family_params_small():
    assert list(family_params(2, 3)) == [
        (0, 0, 0, 0, 2),
        (1, 1, 0, 0, 0),
        (2, 0, 1, 0, 0),
        (2, 1, 0, 0, 1),
        (2, 1, 0, 1, 1),
        (2, 2, 0, 0, 0),
    ]
    assert parse_family((2, 2, 2), 3, 3) == [(2, 3, 0, 0, 0)]


@pytest.mark.parametrize("r, l", [(r, l) for r in range(1, 6) for l in range(2, 6)])
def test_family_params_have_r_rows(r, l):
    for params in family_params(r, l):
        assert len(family_partition(params, l)) <= r
        first = family_first_part(params, l, r)
        assert first == hat_first(family_partition(params, l), l, r)


@pytest.mark.parametrize("n", range(2, 11))
def test_maximize_matches_brute_force(n):
    for r in range(1, n):
        for l in range(2, 6):
            params, best = maximize(r, n, l)
            assert best == brute_pmax(r, n, l)
            assert hat_first(family_partition(params, l), l, r) <= n - r


def test_maximize_examples():
    assert maximize(3, 7, 3) == ((2, 2, 0, 0, 1), 6)
    assert maximize(2, 5, 4) == ((2, 1, 0, 0, 0), 4)


def test_euclid_witness_is_genuine():
    # Recorded counterexample: the unique maximizer at (r, n, l) = (2, 5, 4)
    params, best = maximize(2, 5, 4)
    assert best == 4
    assert not euclid_holds(params, 5, 4)
    maximizers = [lam for lam in enumerate_box(2, 3) if is_admissible(lam, 4) and sum(lam) == 4]
    assert maximizers == [(2, 2)]


def test_maximize_rejects():
    with pytest.raises(ValueError):
        maximize(3, 3, 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(2, 5), st.integers(0, 6))
def test_climb_increases_weight(r, l, extra):
    n = r + 1 + extra
    path = climb((), r, n, l)
    weights = [hat_weight(nu, l, r) for nu in path]
    assert all(a < b for a, b in zip(weights, weights[1:]))
    assert parse_family(path[-1], l, r)
    assert all(hat_first(nu, l, r) <= n - r for nu in path)
