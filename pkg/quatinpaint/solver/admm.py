# coding: utf-8

from __future__ import unicode_literals, absolute_import

from concurrent.futures import ThreadPoolExecutor
from logging import getLogger

import attr
import numpy as np

from ..algebra.linalg import shrink_pair, svt_pair
from ..algebra.tensor import fold_array, unfold_array
from ..exception import NonFiniteIterateException
from .params import UpdateOrder


@attr.s(slots=True, frozen=True)
class ModeStep(object):
    """One term of the L-step: SVT of the mode-`mode` unfolding of P − Yⱼ/β at threshold `tau`."""
    mode = attr.ib()
    tau = attr.ib()
    beta = attr.ib()


@attr.s(slots=True, frozen=True, eq=False)
class AdmmResult(object):
    low_rank = attr.ib()
    sparse = attr.ib()
    iterations = attr.ib()
    residual_history = attr.ib()
    converged = attr.ib()


def stack_norm(stack):
    return float(np.sqrt(np.sum(np.abs(stack) ** 2)))


class AdmmEngine(object):
    """
    Two-block ADMM for min Σⱼ αⱼ‖L_(j)‖* + λ‖S‖₁ subject to L = P, S = Q and P + Q = X on Ω.

    Every mode step owns a copy Lⱼ of the low-rank part and a multiplier Yⱼ tied to P by Lⱼ = P, so the
    blocks (P, Q) and (L₁..L_k, S) are each minimized exactly and the iteration converges to the optimum of
    the weighted sum of nuclear norms. The reported low-rank part is the mean of the copies.

    With the 'standard' order each iteration updates P, Q, S, the copies and then the multipliers; the
    'listing' order updates P, S, the copies, Q. In both, P + Q = X on Ω after the Q-update.
    """
    ITERATION_FORMAT = '%(solver)s iteration %(iteration)d: residuals %(low_rank).3e %(sparse).3e'

    def __init__(self, name, steps, mu, lam, tol, max_iter, threshold_mode, update_order, workers=1):
        self._name = name
        self._steps = list(steps)
        self._mu = mu
        self._lam = lam
        self._tol = tol
        self._max_iter = max_iter
        self._threshold_mode = threshold_mode
        self._update_order = update_order
        self._workers = workers
        self._logger = getLogger(__name__)

    def run(self, observed, omega):
        """
        :param observed:
            (2, ...) complex stack of X, zero off Ω.
        :param omega:
            Boolean array of the observed set.
        :rtype:
            :class:`AdmmResult`
        """
        mu = self._mu
        dims = observed.shape[1:]
        scale = max(1.0, stack_norm(observed))
        copies = [observed.copy() for _ in self._steps]
        sparse = np.zeros_like(observed)
        p_var = np.zeros_like(observed)
        q_var = np.zeros_like(observed)
        y_vars = [np.zeros_like(observed) for _ in self._steps]
        z_var = np.zeros_like(observed)
        history = []
        converged = False
        executor = ThreadPoolExecutor(self._workers) if self._workers > 1 and len(self._steps) > 1 else None
        try:
            for iteration in range(1, self._max_iter + 1):
                p_var = self._update_p(observed, omega, copies, sparse, y_vars, z_var)
                if self._update_order == UpdateOrder.STANDARD:
                    q_var = np.where(omega, observed - p_var, sparse + z_var / mu)
                    sparse = self._update_s(q_var, z_var)
                    copies = self._update_l(p_var, y_vars, dims, executor)
                else:
                    sparse = self._update_s(q_var, z_var)
                    copies = self._update_l(p_var, y_vars, dims, executor)
                    q_var = np.where(omega, observed - p_var, sparse + z_var / mu)
                y_vars = [
                    y_var + step.beta * (copy - p_var)
                    for step, copy, y_var in zip(self._steps, copies, y_vars)
                ]
                z_var = z_var + mu * (sparse - q_var)
                residuals = (
                    max(stack_norm(copy - p_var) for copy in copies) / scale,
                    stack_norm(sparse - q_var) / scale,
                )
                if not np.all(np.isfinite(residuals)):
                    raise NonFiniteIterateException(self._name, iteration, residuals)
                history.append(residuals)
                self._logger.debug(self.ITERATION_FORMAT, {
                    'solver': self._name,
                    'iteration': iteration,
                    'low_rank': residuals[0],
                    'sparse': residuals[1],
                })
                if max(residuals) <= self._tol:
                    converged = True
                    break
        finally:
            if executor is not None:
                executor.shutdown()
        return AdmmResult(self._mean(copies), sparse, len(history), tuple(history), converged)

    def _update_p(self, observed, omega, copies, sparse, y_vars, z_var):
        # Exact minimizer over P of the βⱼ and μ weighted quadratic terms; Q = X − P on Ω.
        low_side = np.zeros_like(observed)
        weight = 0.0
        for step, copy, y_var in zip(self._steps, copies, y_vars):
            low_side = low_side + step.beta * copy + y_var
            weight += step.beta
        inside = (low_side + self._mu * (observed - sparse) - z_var) / (weight + self._mu)
        return np.where(omega, inside, low_side / weight)

    def _update_s(self, q_var, z_var):
        shifted = q_var - z_var / self._mu
        s1, s2 = shrink_pair(shifted[0], shifted[1], self._lam / self._mu)
        return np.stack([s1, s2])

    def _update_l(self, p_var, y_vars, dims, executor):
        def threshold(pair):
            step, y_var = pair
            shifted = p_var - y_var / step.beta
            if step.tau == 0:
                return shifted
            l1, l2 = svt_pair(
                unfold_array(shifted[0], step.mode),
                unfold_array(shifted[1], step.mode),
                step.tau,
                self._threshold_mode,
            )
            return np.stack([fold_array(l1, step.mode, dims), fold_array(l2, step.mode, dims)])

        pairs = list(zip(self._steps, y_vars))
        if executor is None:
            return [threshold(pair) for pair in pairs]
        return list(executor.map(threshold, pairs))

    @staticmethod
    def _mean(copies):
        total = copies[0]
        for copy in copies[1:]:
            total = total + copy
        return total / len(copies)
