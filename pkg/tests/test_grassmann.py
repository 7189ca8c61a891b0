from collections import Counter

import pytest

from grassvanish.bott import block_weight, bott_step, cotangent_components, oracle_table
from grassvanish.grassmann import cohomology_table, p_max, snow_weight, table_rows
from grassvanish.admissible import record
from grassvanish.partitions import schur_dimension


def test_projective_line():
    assert oracle_table(1, 2, 1) == {(0, 0): {(1, 0): 1}}
    assert cohomology_table(1, 2, 1) == {(0, 0): Counter({(1, 0): 1})}


def test_projective_plane_twist_two():
    assert cohomology_table(1, 3, 2) == {
        (0, 0): Counter({(2, 0, 0): 1}),
        (1, 0): Counter({(1, 1, 0): 1}),
    }


def test_euler_characteristic_p0():
    # H^0(G(2,4), O(1)) is the Plucker space
    table = cohomology_table(2, 4, 1)
    assert table == {(0, 0): Counter({(1, 1, 0, 0): 1})}
    assert schur_dimension((1, 1), 4) == 6


def test_snow_weight():
    assert snow_weight(record((4, 2, 1), 5, 3), 7) == (4, 3, 2, 2, 2, 1, 1)
    with pytest.raises(ValueError):
        snow_weight(record((4, 2, 1), 5, 3), 6)


def test_bott_step():
    assert bott_step((0, 0)) == (0, (0, 0))
    assert bott_step((0, 1)) is None
    assert bott_step((0, 2)) == (1, (1, 1))


def test_block_weight_orientation():
    assert block_weight((), 1, 2, 1) == (1, 0)
    assert block_weight((1,), 1, 2, 1) == (0, 1)


def test_cotangent_components():
    assert [lam for lam, _ in cotangent_components(2, 4, 2)] == [(1, 1), (2,)]
    with pytest.raises(ValueError):
        cotangent_components(2, 4, 5)


@pytest.mark.parametrize(
    "r, e, l", [(r, e, l) for e in range(2, 7) for r in range(1, e) for l in range(1, 5)]
)
def test_snow_matches_bott(r, e, l):
    assert cohomology_table(r, e, l) == oracle_table(r, e, l)


def test_p_max_and_rows():
    rows = table_rows(cohomology_table(1, 3, 2))
    assert rows == [(0, 0, (2, 0, 0), 1), (1, 0, (1, 1, 0), 1)]
    assert p_max(1, 3, 2) == 1


def test_bad_arguments():
    with pytest.raises(ValueError):
        cohomology_table(3, 3, 1)
    with pytest.raises(ValueError):
        cohomology_table(1, 3, 0)
    with pytest.raises(ValueError):
        oracle_table(0, 3, 1)
