import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import partitions
from grassvanish.bounds import triangle
from grassvanish.degeneracy import (
    ResolutionTerm,
    SymmetricDecomposition,
    TableRow,
    bracket_product,
    build_symmetric,
    i_of,
    is_k_symmetric,
    k0_insert,
    lemma_bound,
    lemma_statements,
    load_tables,
    lr_identity_checks,
    parse_table,
    rebuild,
    resolution_terms,
    rho,
    twist,
    verify_row,
    verify_tables,
)


def test_build_symmetric():
    assert build_symmetric(1, (1,)) == (3, 2, 1)
    assert build_symmetric(1, ()) == (2, 2)
    assert build_symmetric(0, ()) == ()
    with pytest.raises(ValueError):
        build_symmetric(1, (1, 1, 1))


def test_is_k_symmetric():
    assert is_k_symmetric((3, 2, 2, 1), 2) == SymmetricDecomposition(1, (1,))
    assert is_k_symmetric((3, 2, 1), 1) == (1, (1,))
    assert is_k_symmetric((3, 2, 1), 2) is None
    assert is_k_symmetric((2, 1), 1) is None
    assert is_k_symmetric((), 3) == (0, ())
    with pytest.raises(ValueError):
        is_k_symmetric((2, 2), 0)


@given(st.integers(1, 3), partitions(max_len=6, max_part=4), st.integers(1, 4))
def test_round_trip(l, mu, k):
    mu = mu[: 2 * l]
    lam = rebuild((l, mu), k)
    assert is_k_symmetric(lam, k) == (l, mu)
    assert i_of(lam, k) == sum(mu) + l * (2 * l - 1)


def test_i_of_and_twist():
    assert i_of((3, 2, 1), 1) == 2
    assert twist(1, 2) == -3
    with pytest.raises(ValueError):
        i_of((2, 1), 1)


def test_k0_insert():
    assert k0_insert((1, (1,))) == (3, 1)
    assert k0_insert((1, ())) == (2,)
    with pytest.raises(ValueError):
        k0_insert((0, ()))


def test_resolution_terms():
    assert resolution_terms(4, 2, 2) == [ResolutionTerm(2, (3, 2, 2, 1), -3)]
    assert resolution_terms(3, 0, 2) == [ResolutionTerm(2, (3, 1), -1)]
    assert resolution_terms(5, 2, 0) == [ResolutionTerm(0, (), 0)]
    with pytest.raises(ValueError):
        resolution_terms(3, 3, 1)


@pytest.mark.parametrize("e", range(2, 9))
def test_corank_one_resolution(e):
    assert resolution_terms(e, e - 1, 1) == [ResolutionTerm(1, (2,) * e, -e)]


@pytest.mark.parametrize("e, k", [(e, k) for e in range(2, 8) for k in range(max(1, e - 3), e)])
def test_resolution_index_range(e, k):
    top = triangle(e - k)
    for i in range(3 * top + 5):
        terms = resolution_terms(e, k, i)
        if i > top:
            assert not terms
        for t in terms:
            assert len(t.lam) <= e
            assert rebuild(is_k_symmetric(t.lam, k), k) == t.lam


def test_rho():
    assert rho(10, 5, 2) == 4
    with pytest.raises(ValueError):
        rho(10, 3, 3)


def test_lemma_statements():
    assert lemma_statements("l1", {"c": 1, "d": 1})[0].brackets == ((1, 2), (0, 1))
    assert lemma_bound("l1+", {"c": 1}) == 4
    assert lemma_bound("l3", {"c": 1}, 1) == 8
    assert lemma_statements("l3", {"c": 0})[1].brackets == ((2, 2), (0, 0))
    assert lemma_bound("l7") == 6


@pytest.mark.parametrize(
    "tag, params",
    [("l1", {"c": 2, "d": 1}), ("l1+", {"c": 0}), ("l5", {"a": 1, "c": 0}), ("l9", {})],
)
def test_lemma_rejects(tag, params):
    with pytest.raises(ValueError):
        lemma_statements(tag, params)


def test_bracket_product():
    assert bracket_product(((1, 0), (0, 1)), 3) == {(3, 2, 1): 1, (2, 2, 2): 1}


def test_tables_load():
    rows = load_tables()
    assert len(rows) == 16
    assert {r.e for r in rows} == {4, 5}
    row = next(r for r in rows if r.e == 4 and r.lam == (3, 2, 1))
    assert row.q0 == (5, 4) and row.tags == ("l1", "l1+")
    assert row.params == ({"c": 1, "d": 1}, {"c": 1})


def test_tables_verify():
    assert verify_tables() == []


def test_verify_row_catches_errors():
    bad_bound = TableRow(4, 1, (3, 2, 1), (5,), 6, ("l1",), ({"c": 1, "d": 1},))
    assert any("printed bound" in m for m in verify_row(bad_bound))
    bad_lemma = TableRow(4, 1, (3, 2, 1), (5,), 5, ("l3",), ({"c": 0},))
    assert verify_row(bad_lemma)
    not_symmetric = TableRow(4, 1, (2, 1), (0,), 0, ("A'",), ({},))
    assert verify_row(not_symmetric)


def test_parse_table_comments_and_blanks():
    rows = parse_table("# header\n\n4 1 2,2 4 6 A' -  # note\n")
    assert rows == [TableRow(4, 1, (2, 2), (4,), 6, ("A'",), ({},))]


@pytest.mark.parametrize("e", range(2, 9))
def test_lr_identities(e):
    assert lr_identity_checks(e) == []
