# coding: utf-8

from __future__ import absolute_import, unicode_literals

import numpy as np
import pytest

from quatinpaint.algebra.linalg import qsvd
from quatinpaint.algebra.matrix import NormKind, QMat, qmat_conj_transpose, qmat_matmul, qmat_norm
from quatinpaint.algebra.quaternion import I, J, K, Quat, qmul
from quatinpaint.exception import DimensionMismatchException, InvalidArgumentException
from test.util.random_data import assert_qmat_close, random_qmat


@pytest.fixture(params=list(NormKind))
def norm_kind(request):
    return request.param


def test_single_entry_norms_equal_its_modulus(norm_kind):
    matrix = QMat.from_rows([[Quat(0, 3, 4, 0)]])
    assert qmat_norm(matrix, norm_kind) == pytest.approx(5.0)


@pytest.mark.parametrize('shape', [(1, 1), (3, 2), (2, 5)])
def test_zero_matrix_norms_are_zero(norm_kind, shape):
    assert qmat_norm(QMat.zeros(*shape), norm_kind) == 0


def test_norm_kind_accepts_text():
    matrix = QMat.from_rows([[1, Quat(0, 0, -2, 0)]])
    assert qmat_norm(matrix, 'L1') == pytest.approx(3.0)
    assert qmat_norm(matrix, 'inf') == pytest.approx(2.0)


def test_unknown_norm_kind_is_rejected():
    with pytest.raises(InvalidArgumentException):
        qmat_norm(QMat.identity(2), 'spectral')


def test_frobenius_norm_matches_singular_values(rng):
    matrix = random_qmat(rng, 4, 3)
    sigma = qsvd(matrix).sigma
    assert matrix.norm() ** 2 == pytest.approx(np.sum(sigma ** 2), rel=1e-10)
    assert matrix.norm(NormKind.NUCLEAR) == pytest.approx(np.sum(sigma), rel=1e-10)


def test_identity_is_neutral(rng):
    matrix = random_qmat(rng, 3, 3)
    assert_qmat_close(matrix @ QMat.identity(3), matrix, atol=1e-14)
    assert_qmat_close(QMat.identity(3) @ matrix, matrix, atol=1e-14)


def test_conjugate_transpose_reverses_products(rng):
    a, b = random_qmat(rng, 2, 3), random_qmat(rng, 3, 2)
    assert_qmat_close(qmat_conj_transpose(a @ b), qmat_conj_transpose(b) @ qmat_conj_transpose(a), atol=1e-12)


def test_scalar_unit_product():
    product = qmat_matmul(QMat.from_rows([[I]]), QMat.from_rows([[J]]))
    assert product.entry(0, 0) == K


def test_matmul_matches_entrywise_hamilton_products(rng):
    a, b = random_qmat(rng, 3, 4), random_qmat(rng, 4, 2)
    product = a @ b
    for row in range(3):
        for col in range(2):
            expected = Quat()
            for inner in range(4):
                expected = expected + qmul(a.entry(row, inner), b.entry(inner, col))
            assert product.entry(row, col).as_tuple() == pytest.approx(expected.as_tuple(), abs=1e-12)


def test_matmul_rejects_inner_dimension_mismatch(rng):
    with pytest.raises(DimensionMismatchException):
        qmat_matmul(random_qmat(rng, 2, 3), random_qmat(rng, 2, 3))


def test_conj_transpose_entries(rng):
    matrix = random_qmat(rng, 2, 3)
    adjoint = matrix.conj_transpose()
    assert adjoint.shape == (3, 2)
    assert adjoint.entry(2, 1) == matrix.entry(1, 2).conjugate()


def test_planes_must_share_shape():
    with pytest.raises(DimensionMismatchException):
        QMat(np.zeros((2, 2)), np.zeros((2, 2)), np.zeros((2, 3)), np.zeros((2, 2)))


def test_planes_are_read_only(rng):
    matrix = random_qmat(rng, 2, 2)
    with pytest.raises(ValueError):
        matrix.w[0, 0] = 1.0


def test_arithmetic(rng):
    a, b = random_qmat(rng, 2, 2), random_qmat(rng, 2, 2)
    assert_qmat_close((a + b) - b, a, atol=1e-14)
    assert_qmat_close(-a + a, QMat.zeros(2, 2))
    assert_qmat_close(2 * a, a + a)
    with pytest.raises(DimensionMismatchException):
        a + random_qmat(rng, 2, 3)  # pylint:disable=expression-not-assigned
