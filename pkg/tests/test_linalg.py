from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mlz.linalg import Inertia, SymMatrix, char_poly, inertia, matrix_rank
from mlz.sampling import SplitMix64

from _oracles import gauss_rank, leibniz_char_poly, random_unimodular, sympy_inertia


def test_char_poly_fixed_cases():
    assert char_poly([[0, 1], [1, 0]]) == (1, 0, -1)
    assert char_poly([[0, 1, 1], [1, 0, 1], [1, 1, 0]]) == (1, 0, -3, -2)
    assert char_poly([[0, 0], [0, 0]]) == (1, 0, 0)
    assert char_poly([[5]]) == (1, -5)


rational = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=6
)


@st.composite
def symmetric_matrix(draw, max_size=5):
    n = draw(st.integers(min_value=1, max_value=max_size))
    entries = {}
    for i in range(n):
        for j in range(i, n):
            entries[(i, j)] = draw(rational)
    rows = [[entries[(min(i, j), max(i, j))] for j in range(n)] for i in range(n)]
    return rows


@settings(max_examples=80, deadline=None)
@given(symmetric_matrix())
def test_char_poly_matches_leibniz(rows):
    assert tuple(Fraction(c) for c in char_poly(rows)) == leibniz_char_poly(rows)


def test_inertia_fixed_cases():
    assert inertia([[0, 1], [1, 0]]) == Inertia(1, 1, 0)
    assert inertia([[0, 1, 1], [1, 0, 1], [1, 1, 0]]) == Inertia(1, 2, 0)
    assert inertia([[6, 2, 2, 2], [2, 0, 1, 1], [2, 1, 0, 1], [2, 1, 1, 0]]) == Inertia(
        1, 2, 1
    )
    assert inertia([[2, 0], [0, 2]]) == Inertia(2, 0, 0)
    assert inertia([[0, 0], [0, 0]]) == Inertia(0, 0, 2)


def test_inertia_diagonal_counts_signs():
    rows = [
        [3, 0, 0, 0, 0],
        [0, -2, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, Fraction(1, 7), 0],
        [0, 0, 0, 0, -1],
    ]
    assert inertia(rows) == Inertia(2, 2, 1)


@settings(max_examples=50, deadline=None)
@given(symmetric_matrix(max_size=4))
def test_inertia_matches_sympy(rows):
    assert inertia(rows).as_tuple() == sympy_inertia(rows)


def test_inertia_congruence_invariance_sample():
    rng = SplitMix64(2024)
    for trial in range(50):
        size = 1 + rng.next64() % 5
        rows = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(i, size):
                v = (rng.next64() % 11) - 5
                rows[i][j] = rows[j][i] = v
        base = inertia(rows)
        mat = SymMatrix(rows)
        for _ in range(10):
            t = random_unimodular(rng, size)
            assert inertia(mat.congruence(t)) == base


def test_matrix_rank_fixed():
    assert matrix_rank([[1, 0], [0, 1]]) == 2
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[0, 0], [0, 0]]) == 0
    assert matrix_rank([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]) == 4
    assert (
        matrix_rank(
            [
                [Fraction(1, 2), Fraction(1, 3)],
                [Fraction(1, 4), Fraction(1, 6)],
                [1, Fraction(2, 3)],
            ]
        )
        == 1
    )


@st.composite
def rect_matrix(draw):
    rows = draw(st.integers(min_value=1, max_value=5))
    cols = draw(st.integers(min_value=1, max_value=6))
    return [[draw(rational) for _ in range(cols)] for _ in range(rows)]


@settings(max_examples=80, deadline=None)
@given(rect_matrix())
def test_matrix_rank_matches_gauss(rows):
    assert matrix_rank(rows) == gauss_rank(rows)


def test_symmatrix_rejects_non_symmetric():
    with pytest.raises(ValueError):
        SymMatrix([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        SymMatrix([[1, 2]])


def test_inertia_render_forms():
    ine = Inertia(1, 2, 0)
    assert ine.render() == "(+1,-2,0z)"
    assert ine.to_json_dict() == {"pos": 1, "neg": 2, "zero": 0}
    assert ine.as_tuple() == (1, 2, 0)
