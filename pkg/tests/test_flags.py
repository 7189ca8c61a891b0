import pytest

from grassvanish.flags import (
    OutOfWindow,
    containment_holds,
    envelopes,
    kunneth_split,
    product_as_map,
    product_flag_cohomology,
    single_flag_cohomology,
    window_floor,
)


def test_window():
    assert window_floor(3, [(1, 2)]) == -2
    with pytest.raises(OutOfWindow):
        single_flag_cohomology(4, 3, 1, 2, 3, 0)
    assert issubclass(OutOfWindow, ValueError)


def test_single_flag_values():
    got = {
        (p, q): single_flag_cohomology(4, 3, 1, 2, p, q)
        for p in range(4, 10)
        for q in range(8)
    }
    nonzero = {k: v for k, v in got.items() if v}
    assert nonzero == {
        (4, 1): {1: 1},
        (5, 2): {1: 1},
        (6, 3): {1: 1},
        (7, 3): {0: 1},
        (8, 4): {0: 1},
        (9, 5): {0: 1},
    }


def test_product_value():
    assert product_flag_cohomology(4, 3, [(1, 2), (2, 1)], 8, 4) == (2, 1, [(1, 1), (2, 0)])
    assert product_as_map(3, 2, [(1, 1), (1, 1)], 1, 0) == {(0, 1): 2, (1, 0): 2}


@pytest.mark.parametrize("factors", [[(0, 1)], [(2, 1)], [(1, 0)], []])
def test_bad_factors(factors):
    with pytest.raises(ValueError):
        product_flag_cohomology(3, 2, factors, 5, 0)


def test_envelopes():
    assert envelopes(2, [(1, 1), (1, 1)]) == (4, 2)
    assert envelopes(3, [(1, 2)]) == (9, 5)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_vanishing_outside_envelope(r):
    single = [(s, l) for s in range(1, r) for l in range(1, 4)]
    for fs in [[f] for f in single] + [[f, g] for f in single for g in single]:
        p_max, q_max = envelopes(r, fs)
        for p in range(p_max + 4):
            for q in range(q_max + 4):
                try:
                    got = product_as_map(r + 1, r, fs, p, q)
                except OutOfWindow:
                    continue
                if p > p_max or q > q_max:
                    assert not got
                for sigma in range(4):
                    assert containment_holds(r + 1, r, fs, p, q, sigma)


def test_kunneth_single_factor_agrees():
    for p in range(4, 12):
        for q in range(8):
            split, determined = kunneth_split(4, 3, [(1, 2)], p, q)
            assert determined
            assert split == {(a,): m for a, m in single_flag_cohomology(4, 3, 1, 2, p, q).items()}


def test_kunneth_witness():
    # Recorded mismatch: the split needs a factor at p = -1, below its window
    split, determined = kunneth_split(3, 2, [(1, 1), (1, 1)], 1, 0)
    assert determined
    assert split == {(1, 0): 1, (0, 1): 1}
    assert product_as_map(3, 2, [(1, 1), (1, 1)], 1, 0) != split
