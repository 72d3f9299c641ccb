"""Exact matrix arithmetic, determinants and index-set combinatorics."""

import itertools
import math
import random
from fractions import Fraction

import pytest

from conftest import random_fraction_matrix, random_invertible, random_matrix
from pstab import ExactMatrix, abs_matrix, det, inverse, minor, trace
from pstab.errors import MatrixArgumentError, SingularMatrixError
from pstab.exactmat import (
    as_rational,
    check_index_set,
    index_sets,
    lex_rank,
    lex_unrank,
    principal_submatrix,
    submatrix,
)


def test_as_rational_accepts_exact_forms():
    assert as_rational(3) == 3
    assert as_rational(Fraction(-7, 5)) == Fraction(-7, 5)
    assert as_rational("-7/5") == Fraction(-7, 5)
    assert as_rational("0.1") == Fraction(1, 10)  # decimal, not binary float
    assert as_rational("12") == 12


@pytest.mark.parametrize("bad", [0.1, None, [1], "1/0", "abc"])
def test_as_rational_rejects(bad):
    with pytest.raises(MatrixArgumentError):
        as_rational(bad)


def test_matrix_must_be_square_and_nonempty():
    with pytest.raises(MatrixArgumentError):
        ExactMatrix([[1, 2], [3]])
    with pytest.raises(MatrixArgumentError):
        ExactMatrix([])


def test_matrix_is_immutable():
    m = ExactMatrix([[1, 2], [3, 4]])
    with pytest.raises(AttributeError):
        m.n = 3


def test_entry_is_one_based():
    m = ExactMatrix([[1, 2], [3, 4]])
    assert m.entry(1, 2) == 2
    assert m.entry(2, 1) == 3
    with pytest.raises(MatrixArgumentError):
        m.entry(0, 1)
    with pytest.raises(MatrixArgumentError):
        m.entry(1, 3)


def test_constructors():
    assert ExactMatrix.identity(3) == ExactMatrix(
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    )
    d = ExactMatrix.diagonal(["1/2", 3])
    assert d.entry(1, 1) == Fraction(1, 2)
    assert d.entry(1, 2) == 0


def test_arithmetic_small_cases():
    a = ExactMatrix([[1, 2], [3, 4]])
    b = ExactMatrix([[0, 1], [1, 0]])
    assert a + b == ExactMatrix([[1, 3], [4, 4]])
    assert a - b == ExactMatrix([[1, 1], [2, 4]])
    assert a * b == ExactMatrix([[2, 1], [4, 3]])
    assert a * 2 == ExactMatrix([[2, 4], [6, 8]])
    assert Fraction(1, 2) * a == ExactMatrix([["1/2", 1], ["3/2", 2]])
    assert a.square() == a * a
    assert a.transpose() == ExactMatrix([[1, 3], [2, 4]])
    assert a.scale_rows([2, "1/3"]) == ExactMatrix([[2, 4], [1, "4/3"]])


def test_dimension_mismatch_raises():
    a = ExactMatrix([[1, 2], [3, 4]])
    with pytest.raises(MatrixArgumentError):
        a + ExactMatrix([[1]])
    with pytest.raises(MatrixArgumentError):
        a.scale_rows([1])


def test_det_basics():
    assert det(ExactMatrix.identity(5)) == 1
    assert det(ExactMatrix([[1, 2], [2, 4]])) == 0
    assert det(ExactMatrix([[2, 5, 1], [0, 3, 7], [0, 0, "1/2"]])) == 3
    # needs the row swap path: zero pivot in column 1
    assert det(ExactMatrix([[0, 1], [1, 0]])) == -1


def test_det_two_by_two_formula():
    rng = random.Random(10)
    for _ in range(50):
        m = random_fraction_matrix(rng, 2)
        a, b = m.rows[0]
        c, d = m.rows[1]
        assert det(m) == a * d - b * c


def test_det_is_multiplicative():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.choice([2, 3, 4])
        a = random_fraction_matrix(rng, n)
        b = random_matrix(rng, n)
        assert det(a * b) == det(a) * det(b)
        assert det(a.transpose()) == det(a)


def test_index_set_validation():
    assert check_index_set((1, 3), 4) == (1, 3)
    with pytest.raises(MatrixArgumentError):
        check_index_set((3, 1), 4)  # not increasing
    with pytest.raises(MatrixArgumentError):
        check_index_set((1, 5), 4)  # out of range
    with pytest.raises(MatrixArgumentError):
        check_index_set((), 4)
    with pytest.raises(MatrixArgumentError):
        check_index_set((1, 2), 4, k=3)


def test_lex_rank_unrank_bijection():
    for n in range(1, 7):
        for k in range(1, n + 1):
            sets = list(index_sets(n, k))
            assert len(sets) == math.comb(n, k)
            for expected_rank, s in enumerate(sets, start=1):
                assert lex_rank(s, n) == expected_rank
                assert lex_unrank(n, k, expected_rank) == s
    with pytest.raises(MatrixArgumentError):
        lex_unrank(4, 2, 7)


def test_submatrix_and_minor():
    m = ExactMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert submatrix(m, (1, 3), (2, 3)) == ExactMatrix([[2, 3], [8, 10]])
    assert minor(m, (1, 3), (2, 3)) == 2 * 10 - 3 * 8
    assert principal_submatrix(m, (2, 3)) == ExactMatrix([[5, 6], [8, 10]])
    with pytest.raises(MatrixArgumentError):
        minor(m, (1, 2), (1,))


def test_inverse_round_trip():
    rng = random.Random(12)
    for _ in range(20):
        n = rng.choice([1, 2, 3, 4])
        m = random_invertible(rng, n)
        assert m * inverse(m) == ExactMatrix.identity(n)
        assert inverse(m) * m == ExactMatrix.identity(n)


def test_inverse_of_singular_raises():
    with pytest.raises(SingularMatrixError):
        inverse(ExactMatrix([[1, 2], [2, 4]]))


def test_trace_and_abs():
    m = ExactMatrix([[1, -2], ["-1/2", 4]])
    assert trace(m) == 5
    assert abs_matrix(m) == ExactMatrix([[1, 2], ["1/2", 4]])
