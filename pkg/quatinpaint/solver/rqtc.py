# coding: utf-8

from __future__ import unicode_literals, absolute_import

import numpy as np

from ..algebra.matrix import complex_stack
from ..algebra.tensor import QTensor
from ..util.solver_call import solver_call
from .admm import AdmmEngine, ModeStep
from .params import LAverage, SolveParams
from .qmc import observed_set
from .report import SolveReport
from .solver_interface import Solver


class RQTCSolver(Solver):
    """
    Robust quaternion tensor completion with the weighted sum of nuclear norms of all unfoldings.

    Mode j keeps its own copy Lⱼ = foldⱼ(approxQ(P_(j) − Yⱼ_(j)/βⱼ, αⱼ/βⱼ)) and the reported L is their mean;
    with l_average='active' only the modes with αⱼ > 0 get a copy.
    """
    NAME = 'rqtc'

    @staticmethod
    def mode_steps(params, order, mu=None):
        alpha = params.weights(order)
        betas = params.betas(order, mu)
        steps = [
            ModeStep(mode=mode, tau=weight / beta, beta=beta)
            for mode, weight, beta in zip(range(1, order + 1), alpha, betas)
        ]
        if params.l_average == LAverage.ACTIVE:
            steps = [step for step, weight in zip(steps, alpha) if weight > 0]
        return steps

    @solver_call
    def solve(self, observed, mask, params):
        """Base class override.

        :type observed:     :class:`QTensor`
        :rtype:             :class:`SolveReport` whose parts are :class:`QTensor`
        """
        omega = observed_set(mask, observed.dims)
        order = observed.order
        rho = np.count_nonzero(omega) / float(omega.size)
        alpha = params.weights(order)
        lam = params.sparsity_weight(observed.dims, rho if rho > 0 else 1.0, alpha)
        stack = np.where(omega, complex_stack(observed), 0)
        mu = params.penalty(QTensor.from_complex_pair(stack[0], stack[1]))
        engine = AdmmEngine(
            self.NAME,
            self.mode_steps(params, order, mu),
            mu=mu,
            lam=lam,
            tol=params.tol,
            max_iter=params.max_iter,
            threshold_mode=params.threshold_mode,
            update_order=params.update_order,
            workers=params.workers,
        )
        result = engine.run(stack, omega)
        return SolveReport(
            low_rank=QTensor.from_complex_pair(result.low_rank[0], result.low_rank[1]),
            sparse=QTensor.from_complex_pair(result.sparse[0], result.sparse[1]),
            iterations=result.iterations,
            residual_history=result.residual_history,
            converged=result.converged,
            solver=self.NAME,
            lam=lam,
            mu=mu,
        )


def rqtc_solve(observed, mask, params=None):
    """
    Complete a k-mode quaternion tensor.

    :param observed:    Observed tensor, zero off Ω.
    :type observed:     :class:`QTensor`
    :param mask:        The observed set.
    :type mask:         :class:`ObsMask`
    :param params:      Solver parameters; lam='auto' resolves through :func:`default_lambda`.
    :type params:       :class:`SolveParams` or None
    :rtype:             :class:`SolveReport`
    """
    return RQTCSolver().solve(observed, mask, params or SolveParams())
