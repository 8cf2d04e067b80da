# coding: utf-8

from __future__ import unicode_literals, absolute_import

from math import sqrt
from numbers import Real

import attr
import numpy as np
from six import string_types

from ..algebra.linalg import ThresholdMode
from ..algebra.tensor import WeightVec
from ..config import Solver
from ..exception import InvalidArgumentException
from ..util.text_enum import TextEnum


AUTO = 'auto'
AVERAGED = 'averaged'


class LAverage(TextEnum):
    """Which modes the L-step averages over."""
    ALL = 'all'
    ACTIVE = 'active'


class UpdateOrder(TextEnum):
    """Intra-iteration ordering of the ADMM updates."""
    STANDARD = 'standard'
    LISTING = 'listing'


def _positive(name):
    def validate(_instance, _attribute, value):
        if not value > 0:
            raise InvalidArgumentException(name, value, 'must be positive')
    return validate


def _optional_betas(value):
    if value is None:
        return None
    if isinstance(value, Real):
        return float(value)
    return tuple(float(beta) for beta in value)


def _optional_weights(value):
    if value is None or isinstance(value, WeightVec):
        return value
    return WeightVec(value)


def _keyword_or_float(keywords):
    def convert(value):
        if isinstance(value, string_types) and value.strip().lower() in keywords:
            return value.strip().lower()
        return float(value)
    return convert


@attr.s(slots=True, frozen=True)
class SolveParams(object):
    """
    ADMM parameters shared by the matrix, tensor and patch-learning solvers.

    :param mu:
        Penalty μ > 0 of the sparse block (and of the low-rank block in the matrix model), or 'auto' for
        N / (4·‖X‖₁) of the data being solved.
    :param beta:
        Per-mode penalties βⱼ > 0; a scalar is used for every mode, None means βⱼ = μ.
    :param lam:
        Sparsity weight λ > 0, 'auto' for :func:`default_lambda` or 'averaged' for :func:`averaged_lambda`.
    :param alpha:
        Mode weights; None means uniform.
    :param tol:
        Stop once both normalized primal residuals are at most `tol`.
    :param max_iter:
        Iteration cap.
    :param threshold_mode:
        'soft' or 'hard' singular value thresholding.
    :param l_average:
        'all' averages the L-step over every mode, 'active' over modes with αⱼ > 0.
    :param update_order:
        'standard' or 'listing'.
    :param workers:
        Threads used for independent SVTs and group solves.
    """
    mu = attr.ib(default=Solver.MU, converter=_keyword_or_float((AUTO,)))
    beta = attr.ib(default=None, converter=_optional_betas)
    lam = attr.ib(default=AUTO, converter=_keyword_or_float((AUTO, AVERAGED)))
    alpha = attr.ib(default=None, converter=_optional_weights)
    tol = attr.ib(default=Solver.TOL, converter=float, validator=_positive('tol'))
    max_iter = attr.ib(default=Solver.MAX_ITER, converter=int, validator=_positive('max_iter'))
    threshold_mode = attr.ib(default=Solver.THRESHOLD_MODE, converter=lambda value: ThresholdMode.parse(value, 'threshold_mode'))
    l_average = attr.ib(default=Solver.L_AVERAGE, converter=lambda value: LAverage.parse(value, 'l_average'))
    update_order = attr.ib(default=Solver.UPDATE_ORDER, converter=lambda value: UpdateOrder.parse(value, 'update_order'))
    workers = attr.ib(default=Solver.WORKERS, converter=int, validator=_positive('workers'))

    def __attrs_post_init__(self):
        if self.mu != AUTO and not self.mu > 0:
            raise InvalidArgumentException('mu', self.mu, "must be positive or 'auto'")
        if self.lam not in (AUTO, AVERAGED) and not self.lam > 0:
            raise InvalidArgumentException('lam', self.lam, "must be positive, 'auto' or 'averaged'")
        if self.beta is not None:
            betas = [self.beta] if isinstance(self.beta, float) else self.beta
            if not betas or any(not beta > 0 for beta in betas):
                raise InvalidArgumentException('beta', self.beta, 'must be positive')

    def penalty(self, data):
        """μ, resolving 'auto' through :func:`suggest_penalty` on the observed `data`."""
        if self.mu == AUTO:
            return suggest_penalty(data)
        return self.mu

    def betas(self, order, mu=None):
        """The k per-mode penalties; βⱼ = `mu` (default: the configured μ) when no β is set."""
        if self.beta is None:
            return ((self.mu if mu is None else mu),) * order
        if isinstance(self.beta, float):
            return (self.beta,) * order
        if len(self.beta) != order:
            raise InvalidArgumentException('beta', self.beta, 'expected {0} values'.format(order))
        return self.beta

    def weights(self, order):
        if self.alpha is None:
            return WeightVec.uniform(order)
        if len(self.alpha) != order:
            raise InvalidArgumentException('alpha', self.alpha.alpha, 'expected {0} weights'.format(order))
        return self.alpha

    def sparsity_weight(self, dims, rho, alpha):
        """λ, resolving 'auto' and 'averaged' from the dimensions and sampling ratio."""
        if self.lam == AUTO:
            return default_lambda(dims, rho, alpha)
        if self.lam == AVERAGED:
            return averaged_lambda(dims, rho, alpha)
        return self.lam

    def as_dict(self):
        values = attr.asdict(self, recurse=False)
        values['alpha'] = None if self.alpha is None else list(self.alpha)
        for key in ('threshold_mode', 'l_average', 'update_order'):
            values[key] = str(values[key])
        return values


def default_lambda(dims, rho, alpha):
    """
    λ = Σⱼ αⱼ² / √(ρ·nⱼ⁽¹⁾) with nⱼ⁽¹⁾ = max(nⱼ, ∏_{i≠j} nᵢ).

    :param dims:
        Tensor (or matrix) dimensions.
    :type dims:
        `tuple` of `int`
    :param rho:
        Observed ratio, 0 < ρ ≤ 1.
    :type rho:
        `float`
    :param alpha:
        Mode weights, one per dimension.
    :type alpha:
        :class:`WeightVec` or `list`
    :rtype:
        `float`
    """
    if not 0 < rho <= 1:
        raise InvalidArgumentException('rho', rho, 'must lie in (0, 1]')
    dims = [int(n) for n in dims]
    if len(alpha) != len(dims):
        raise InvalidArgumentException('alpha', list(alpha), 'expected {0} weights'.format(len(dims)))
    total = int(np.prod(dims))
    lam = 0.0
    for size, weight in zip(dims, alpha):
        unfolded = max(size, total // size)
        lam += weight * weight / sqrt(rho * unfolded)
    return lam


def suggest_penalty(data):
    """
    N / (4·‖X‖₁), the usual robust-PCA penalty for data not on the pixel scale.

    :param data:    A :class:`QMat` or :class:`QTensor`.
    :rtype:         `float`
    """
    total = float(np.sum(data.modulus()))
    if total == 0:
        return Solver.MU
    return data.modulus().size / (4.0 * total)


def averaged_lambda(dims, rho, alpha):
    """
    λ = Σⱼ αⱼ / √(ρ·nⱼ⁽¹⁾), the α-weighted mean of the matrix weights 1/√(ρ·nⱼ⁽¹⁾) of the unfoldings.

    Equal to :func:`default_lambda` when α is one-hot; for spread weights it is larger by about 1 / max αⱼ.

    :param dims:    Tensor (or matrix) dimensions.
    :param rho:     Observed ratio, 0 < ρ ≤ 1.
    :param alpha:   Mode weights, one per dimension.
    :rtype:         `float`
    """
    return default_lambda(dims, rho, [sqrt(weight) for weight in alpha])
