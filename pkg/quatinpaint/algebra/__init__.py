# coding: utf-8

from __future__ import unicode_literals, absolute_import

from .quaternion import Quat, qmul
from .matrix import QMat, NormKind, qmat_norm, qmat_matmul, qmat_conj_transpose
from .linalg import (
    QSvd, QEig, qsvd, singular_values, qeig_hermitian, shrink_q, approx_q, delta_rank, delta_rank_bound,
    max_column_distance,
)
from .tensor import QTensor, ObsMask, WeightVec, unfold, fold, sample, snn, tensor_l1


__all__ = list(map(str, [
    'Quat', 'qmul', 'QMat', 'NormKind', 'qmat_norm', 'qmat_matmul', 'qmat_conj_transpose',
    'QSvd', 'QEig', 'qsvd', 'singular_values', 'qeig_hermitian', 'shrink_q', 'approx_q', 'delta_rank', 'delta_rank_bound',
    'max_column_distance',
    'QTensor', 'ObsMask', 'WeightVec', 'unfold', 'fold', 'sample', 'snn', 'tensor_l1',
]))
