# coding: utf-8

from __future__ import unicode_literals, absolute_import

from logging import getLogger

import attr
import numpy as np

from ..algebra.linalg import qsvd
from ..algebra.matrix import pair_conj_transpose, pair_matmul, pair_modulus
from ..algebra.tensor import fold_array, unfold
from ..config import Numerics
from ..exception import DecompositionException


_LOGGER = getLogger(__name__)


@attr.s(slots=True, frozen=True)
class ModeIncoherence(object):
    """
    Incoherence quantities of one unfolding X_(j) = Uⱼ·Σⱼ·Vⱼ*.

    :param mode:        1-based mode j.
    :param rank:        Numerical rank rⱼ.
    :param left:        maxᵢ ‖Uⱼ*eᵢ‖².
    :param right:       maxᵢ ‖Vⱼ*eᵢ‖².
    :param joint:       ‖UⱼVⱼ*‖∞.
    :param mu:          Smallest μ satisfying the three mode-j inequalities.
    """
    mode = attr.ib()
    rank = attr.ib()
    left = attr.ib()
    right = attr.ib()
    joint = attr.ib()
    mu = attr.ib()


@attr.s(slots=True, frozen=True)
class IncoherenceReport(object):
    """
    :param modes:       One :class:`ModeIncoherence` per mode.
    :param mutual:      ‖𝓣‖/k with ‖·‖ the largest entry modulus.
    :param mutual_mu:   Smallest μ satisfying the mutual inequality for every mode.
    :param mu:          Smallest μ satisfying every constraint.
    """
    modes = attr.ib(converter=tuple)
    mutual = attr.ib()
    mutual_mu = attr.ib()
    mu = attr.ib()

    def to_dict(self):
        return attr.asdict(self)


def _row_energy(p1, p2):
    return np.sum(np.abs(p1) ** 2 + np.abs(p2) ** 2, axis=1)


def incoherence(tensor):
    """
    Evaluate the tensor incoherence conditions of `tensor` and the smallest μ meeting all of them.

    :type tensor:
        :class:`QTensor`
    :rtype:
        :class:`IncoherenceReport`
    :raises:
        :class:`DecompositionException` for a zero tensor.
    """
    dims = tuple(tensor.dims)
    total = int(np.prod(dims))
    if tensor.norm() == 0:
        raise DecompositionException('incoherence', dims, 'the tensor is zero')
    modes = []
    mutual_terms = []
    t1 = np.zeros(dims, dtype=complex)
    t2 = np.zeros(dims, dtype=complex)
    for mode in range(1, len(dims) + 1):
        n = dims[mode - 1]
        rest = total // n
        larger, smaller = max(n, rest), min(n, rest)
        decomposition = qsvd(unfold(tensor, mode))
        sigma = decomposition.sigma
        rank = int(np.count_nonzero(sigma > Numerics.RANK_TOL * sigma[0]))
        u1, u2 = (plane[:, :rank] for plane in decomposition.u.complex_pair())
        v1, v2 = (plane[:, :rank] for plane in decomposition.v.complex_pair())
        left = float(np.max(_row_energy(u1, u2)))
        right = float(np.max(_row_energy(v1, v2)))
        p1, p2 = pair_matmul(u1, u2, *pair_conj_transpose(v1, v2))
        joint = float(np.max(pair_modulus(p1, p2)))
        modes.append(ModeIncoherence(
            mode=mode,
            rank=rank,
            left=left,
            right=right,
            joint=joint,
            mu=max(left * n / rank, right * rest / rank, joint / np.sqrt(rank / float(larger * smaller))),
        ))
        mutual_terms.append(np.sqrt(rank / float(smaller)))
        t1 += np.sqrt(larger) * fold_array(p1, mode, dims)
        t2 += np.sqrt(larger) * fold_array(p2, mode, dims)
    mutual = float(np.max(pair_modulus(t1, t2))) / len(dims)
    mutual_mu = max(mutual / term for term in mutual_terms)
    mu = max([mode.mu for mode in modes] + [mutual_mu])
    _LOGGER.debug('Incoherence of %s: mu=%.4g (mutual %.4g)', dims, mu, mutual_mu)
    return IncoherenceReport(modes=modes, mutual=mutual, mutual_mu=mutual_mu, mu=mu)
