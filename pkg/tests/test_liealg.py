from fractions import Fraction

import pytest

from selmerdim.liealg import (
    BracketWord,
    GradedDimensionTable,
    cumulative_dimension,
    lyndon_words,
    metabelian_basis,
    metabelian_dimension,
    metabelian_table,
    witt_dimension,
    witt_table,
)
from oracles import (
    brute_lyndon_words,
    brute_metabelian_words,
    model_metabelian_dimension,
)


def test_witt_dimension_examples():
    assert witt_dimension(2, 1) == 2
    assert witt_dimension(2, 3) == 2
    assert witt_dimension(4, 2) == 6


def test_witt_dimension_validation():
    with pytest.raises(ValueError):
        witt_dimension(0, 1)
    with pytest.raises(ValueError):
        witt_dimension(2, 0)


def test_lyndon_words_examples():
    assert lyndon_words(2, 2) == [(1, 2)]
    assert lyndon_words(2, 3) == [(1, 1, 2), (1, 2, 2)]
    assert lyndon_words(3, 1) == [(1,), (2,), (3,)]


def test_lyndon_words_match_rotation_oracle():
    for m in (1, 2, 3):
        for n in range(1, 7):
            assert lyndon_words(m, n) == brute_lyndon_words(m, n), (m, n)


def test_lyndon_count_equals_witt():
    for m in range(1, 5):
        for n in range(1, 9):
            assert len(lyndon_words(m, n)) == witt_dimension(m, n), (m, n)


def test_bracket_word_validation():
    word = BracketWord((1, 3, 2, 2), 3)
    assert word.arity == 4
    with pytest.raises(ValueError):
        BracketWord((2, 2), 3)  # needs i1 < i2
    with pytest.raises(ValueError):
        BracketWord((1, 2, 3), 3)  # tail must not increase
    with pytest.raises(ValueError):
        BracketWord((1, 4), 3)  # outside the alphabet
    with pytest.raises(ValueError):
        BracketWord((1,), 3)  # arity >= 2


def test_metabelian_basis_examples():
    assert [w.indices for w in metabelian_basis(2, 2)] == [(1, 2)]
    assert [w.indices for w in metabelian_basis(2, 3)] == [(1, 2, 1), (1, 2, 2)]
    assert len(list(metabelian_basis(3, 3))) == 8


def test_metabelian_basis_rejects_low_arity():
    with pytest.raises(ValueError):
        list(metabelian_basis(2, 1))
    with pytest.raises(ValueError):
        list(metabelian_basis(1, 2))


def test_metabelian_basis_is_sorted_and_complete():
    """Strictly increasing lexicographic stream, matching the filtered product."""
    for m in range(2, 6):
        for n in range(2, 9):
            words = [w.indices for w in metabelian_basis(m, n)]
            assert words == sorted(words)
            assert len(set(words)) == len(words)
            assert words == brute_metabelian_words(m, n), (m, n)


def test_metabelian_dimension_examples():
    assert metabelian_dimension(2, 2) == 1
    assert metabelian_dimension(3, 3) == 8
    assert metabelian_dimension(2, 1) == 2


def test_metabelian_closed_form_matches_enumeration():
    for m in range(2, 7):
        for n in range(2, 9):
            count = sum(1 for _ in metabelian_basis(m, n))
            assert metabelian_dimension(m, n) == count, (m, n)


def test_metabelian_equals_witt_below_level_four():
    for m in range(2, 7):
        for n in range(1, 4):
            assert metabelian_dimension(m, n) == witt_dimension(m, n), (m, n)


def test_metabelian_strictly_below_witt_from_level_four():
    # On two generators nothing dies at level 4 either: the smallest
    # bracket of two brackets needs degree 5 there, so strictness starts
    # one level later.
    assert metabelian_dimension(2, 4) == witt_dimension(2, 4) == 3
    for n in range(5, 11):
        assert metabelian_dimension(2, n) < witt_dimension(2, n), n
    for m in range(3, 7):
        for n in range(4, 11):
            assert metabelian_dimension(m, n) < witt_dimension(m, n), (m, n)


def test_metabelian_dimension_matches_tensor_model_rank():
    """The closed form agrees with the rank of the embedded basis vectors."""
    for m in range(2, 5):
        for n in range(2, 6):
            assert metabelian_dimension(m, n) == model_metabelian_dimension(m, n), (m, n)


def _lagrange_eval(points, x):
    total = Fraction(0)
    for i, (xi, yi) in enumerate(points):
        term = Fraction(yi)
        for j, (xj, _) in enumerate(points):
            if i != j:
                term *= Fraction(x - xj, xi - xj)
        total += term
    return total


def test_metabelian_dimension_is_polynomial_of_degree_m_minus_one():
    """Fit on m points at levels >= 2, then check m further points exactly."""
    for m in range(2, 7):
        points = [(n, metabelian_dimension(m, n)) for n in range(2, m + 2)]
        for n in range(m + 2, 2 * m + 2):
            assert _lagrange_eval(points, n) == metabelian_dimension(m, n), (m, n)


def test_graded_dimension_table_validation():
    table = metabelian_table(4, 3)
    assert table.rows == {1: 4, 2: 6, 3: 20}
    assert table.max_level == 3
    with pytest.raises(ValueError):
        GradedDimensionTable(4, {1: 4, 3: 20}, "metabelian")  # gap
    with pytest.raises(ValueError):
        GradedDimensionTable(4, {1: 3, 2: 6}, "metabelian")  # row 1 must equal m
    with pytest.raises(ValueError):
        GradedDimensionTable(4, {1: 4}, "made-up")
    # eigenplus tables may start below the generator count
    GradedDimensionTable(4, {1: 2, 2: 2}, "eigenplus")


def test_cumulative_dimension_examples():
    metab4 = metabelian_table(4, 2)
    assert cumulative_dimension(metab4, 1) == 4
    assert cumulative_dimension(metab4, 2) == 10
    witt2 = witt_table(2, 3)
    assert cumulative_dimension(witt2, 3) == 5


def test_cumulative_dimension_missing_rows():
    table = witt_table(2, 3)
    with pytest.raises(ValueError):
        cumulative_dimension(table, 4)
    with pytest.raises(ValueError):
        cumulative_dimension(table, 0)
