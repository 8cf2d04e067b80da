# coding: utf-8

from __future__ import unicode_literals, absolute_import

import numpy as np

from ..algebra.matrix import QMat, complex_stack
from ..algebra.tensor import ObsMask, QTensor, WeightVec
from ..exception import DimensionMismatchException
from ..util.solver_call import solver_call
from .admm import AdmmEngine, ModeStep
from .params import SolveParams
from .report import SolveReport, merge_histories
from .solver_interface import Solver


def observed_set(mask, shape):
    """Boolean array of Ω from an :class:`ObsMask` or an array, checked against `shape`."""
    omega = mask.observed if isinstance(mask, ObsMask) else np.asarray(mask, dtype=bool)
    if tuple(omega.shape) != tuple(shape):
        raise DimensionMismatchException('mask', expected=tuple(shape), actual=tuple(omega.shape))
    return omega


class QMCSolver(Solver):
    """Robust quaternion matrix completion: min ‖L‖* + λ‖S‖₁ subject to P_Ω(L + S) = X."""
    NAME = 'qmc'

    @solver_call
    def solve(self, observed, mask, params):
        """Base class override.

        :param observed:    m×n observed matrix; entries off Ω are ignored.
        :type observed:     :class:`QMat`
        :rtype:             :class:`SolveReport` whose parts are :class:`QMat`
        """
        omega = observed_set(mask, observed.shape)
        rho = np.count_nonzero(omega) / float(omega.size)
        lam = params.sparsity_weight(observed.shape, rho if rho > 0 else 1.0, WeightVec((1.0, 0.0)))
        stack = np.where(omega, complex_stack(observed), 0)
        mu = params.penalty(QMat.from_complex_pair(stack[0], stack[1]))
        engine = AdmmEngine(
            self.NAME,
            [ModeStep(mode=1, tau=1.0 / mu, beta=mu)],
            mu=mu,
            lam=lam,
            tol=params.tol,
            max_iter=params.max_iter,
            threshold_mode=params.threshold_mode,
            update_order=params.update_order,
        )
        result = engine.run(stack, omega)
        return SolveReport(
            low_rank=QMat.from_complex_pair(result.low_rank[0], result.low_rank[1]),
            sparse=QMat.from_complex_pair(result.sparse[0], result.sparse[1]),
            iterations=result.iterations,
            residual_history=result.residual_history,
            converged=result.converged,
            solver=self.NAME,
            lam=lam,
            mu=mu,
        )


class FramewiseQMCSolver(Solver):
    """Matrix completion applied to every frontal slice of a video independently."""
    NAME = 'qmc-framewise'

    def __init__(self, matrix_solver=None):
        super(FramewiseQMCSolver, self).__init__()
        self._matrix_solver = matrix_solver or QMCSolver()

    @solver_call
    def solve(self, observed, mask, params):
        """Base class override."""
        omega = observed_set(mask, observed.dims)
        reports = [
            self._matrix_solver.solve(observed.frame(index), omega[:, :, index], params)
            for index in range(observed.dims[2])
        ]
        return SolveReport(
            low_rank=QTensor.from_frames(report.low_rank for report in reports),
            sparse=QTensor.from_frames(report.sparse for report in reports),
            iterations=max(report.iterations for report in reports),
            residual_history=merge_histories([report.residual_history for report in reports]),
            converged=all(report.converged for report in reports),
            solver=self.NAME,
            group_count=len(reports),
        )


def qmc_solve(observed, mask, params=None):
    """
    Complete a quaternion matrix.

    :param observed:
        Observed matrix X, zero off Ω.
    :type observed:
        :class:`QMat`
    :param mask:
        Boolean m×n array or :class:`ObsMask` of Ω.
    :param params:
        Solver parameters; defaults when None.
    :type params:
        :class:`SolveParams` or None
    :returns:
        (L, S, report)
    :rtype:
        `tuple`
    """
    report = QMCSolver().solve(observed, mask, params or SolveParams())
    return report.low_rank, report.sparse, report
