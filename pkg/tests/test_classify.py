"""Membership tests for the minor-positivity classes."""

import math
import random
from fractions import Fraction

import pytest

from conftest import random_matrix, random_spd_matrix
from pstab import ExactMatrix
from pstab.classify import (
    classify_full,
    is_p,
    is_p2,
    is_q,
    is_q2,
    is_sign_symmetric,
    is_square_diag_dominant,
    order_sum_traces,
)
from pstab.errors import MatrixArgumentError
from pstab.fixtures import DEMO_A, DEMO_D, DEMO_SQUARE_ORDER_SUMS


def test_identity_belongs_to_everything():
    report = classify_full(ExactMatrix.identity(4))
    assert all(report.flags().values())
    # order-k sum of principal minors of I is C(n, k)
    assert report.order_sums == [math.comb(4, k) for k in range(1, 5)]
    assert report.order_sums == report.order_sums_square
    assert report.witnesses == {}


def test_demo_matrix_class_profile():
    report = classify_full(DEMO_A)
    flags = report.flags()
    assert flags["P"] and flags["Q"] and flags["Q2"]
    assert not flags["P2"]
    assert not flags["sign_symmetric"]
    assert not flags["row_sqdd"] and not flags["col_sqdd"]
    assert tuple(report.order_sums_square) == DEMO_SQUARE_ORDER_SUMS


def test_is_p_witness_is_first_in_order():
    verdict, witness = is_p(ExactMatrix([[1, 0], [0, -1]]))
    assert not verdict
    assert witness.order == 1 and witness.rows == (2,) and witness.value == -1
    # positive diagonal, so the first violation appears at order 2
    verdict, witness = is_p(ExactMatrix([[1, 3], [3, 1]]))
    assert not verdict
    assert witness.order == 2 and witness.value == -8
    assert "A(1,2; 1,2) = -8" == witness.describe()


def test_order_sum_traces_match_direct_minors():
    rng = random.Random(30)
    from pstab.exactmat import index_sets, minor

    for _ in range(10):
        n = rng.choice([2, 3, 4])
        m = random_matrix(rng, n, -4, 4)
        sums_m, sums_m2 = order_sum_traces(m)
        sq = m.square()
        for k in range(1, n + 1):
            direct = sum(minor(m, s, s) for s in index_sets(n, k))
            direct_sq = sum(minor(sq, s, s) for s in index_sets(n, k))
            assert sums_m[k - 1] == direct
            assert sums_m2[k - 1] == direct_sq


def test_is_q_accepts_non_p_matrix():
    # a zero principal minor at order 1 but positive sums at each order
    m = ExactMatrix([[0, 1], [-1, 3]])
    verdict, sums, witness = is_q(m)
    assert verdict and witness is None
    assert not is_p(m)[0]


def test_scaled_demo_square_fails_q_at_order_one():
    scaled = DEMO_A.scale_rows(DEMO_D)
    verdict, _, witness = is_q(scaled.square())
    assert not verdict
    assert witness.order == 1
    assert witness.value == Fraction(-93, 5)


def test_is_q2_reports_square_witness():
    verdict, sums_m, sums_m2, witness = is_q2(DEMO_A.scale_rows(DEMO_D))
    assert not verdict
    assert all(s > 0 for s in sums_m)  # the matrix itself is still Q
    assert witness.value == sums_m2[0]


def test_is_p2_on_demo():
    verdict, witness = is_p2(DEMO_A)
    assert not verdict
    assert witness.value == -30  # (A^2)_22


def test_spd_matrices_are_sign_symmetric_p2():
    rng = random.Random(31)
    for _ in range(5):
        m = random_spd_matrix(rng, 4)
        assert is_p(m)[0]
        assert is_p2(m)[0]
        assert is_sign_symmetric(m)[0]


def test_sign_symmetry_witness():
    verdict, witness = is_sign_symmetric(DEMO_A)
    assert not verdict
    assert witness.order == 1
    assert witness.value == DEMO_A.entry(1, 2) * DEMO_A.entry(2, 1)


def test_sign_symmetry_cap():
    with pytest.raises(MatrixArgumentError):
        is_sign_symmetric(ExactMatrix.identity(8))


def test_square_diag_dominance_sides():
    m = ExactMatrix([[5, 3], [1, 5]])
    assert is_square_diag_dominant(m, "row")[0]
    assert is_square_diag_dominant(m, "col")[0]
    lopsided = ExactMatrix([[2, 3], [0, 10]])  # 4 <= 9 on row 1
    assert not is_square_diag_dominant(lopsided, "row")[0]
    assert is_square_diag_dominant(lopsided, "col")[0]
    assert is_square_diag_dominant(lopsided.transpose(), "row")[0]
    with pytest.raises(MatrixArgumentError):
        is_square_diag_dominant(m, "diag")


def test_classify_full_agrees_with_individual_tests():
    rng = random.Random(32)
    for _ in range(10):
        m = random_matrix(rng, rng.choice([2, 3]), -3, 3)
        report = classify_full(m)
        assert report.is_p == is_p(m)[0]
        assert report.is_q == is_q(m)[0]
        assert report.is_p2 == is_p2(m)[0]
        assert report.is_q2 == is_q2(m)[0]
        assert report.is_sign_symmetric == is_sign_symmetric(m)[0]
        assert report.is_row_sqdd == is_square_diag_dominant(m, "row")[0]
        assert report.is_col_sqdd == is_square_diag_dominant(m, "col")[0]
        for key, flag in report.flags().items():
            if not flag:
                assert key in report.witnesses
