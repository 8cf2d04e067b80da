# coding: utf-8

from __future__ import unicode_literals, absolute_import

from concurrent.futures import ThreadPoolExecutor
from logging import getLogger

import attr
import numpy as np

from ..algebra.matrix import complex_stack
from ..algebra.tensor import QTensor
from ..exception import DimensionMismatchException
from ..patch.aggregation import PatchAccumulator
from ..patch.classification import choose_exemplars, classify_2dqpca, whole_window_group
from ..patch.extraction import patches_from_stack, tile_origins
from ..patch.patch_config import ORIENTATION_AXES, PatchConfig
from ..util.solver_call import solver_call
from .params import SolveParams
from .qmc import QMCSolver, observed_set
from .report import SolveReport, merge_histories
from .solver_interface import Solver


@attr.s(slots=True, frozen=True, eq=False)
class _GroupJob(object):
    orientation = attr.ib()
    window = attr.ib()
    origin = attr.ib()
    group = attr.ib()


@attr.s(slots=True, frozen=True, eq=False)
class _GroupResult(object):
    low_rank = attr.ib()
    sparse = attr.ib()
    report = attr.ib()


def window_groups(stack, omega, cfg):
    """
    Cut a slice stack into windows and group each window's patches.

    :param stack:
        Complex stack (2, rows, cols, slices) of the observed data.
    :param omega:
        Boolean (rows, cols, slices) observed set.
    :type cfg:
        :class:`PatchConfig`
    :returns:
        (window index, (row, col) origin, :class:`PatchGroup`) triples, windows in row-major order.
    :rtype:
        `list`
    """
    rows, cols, _ = omega.shape
    row_origins, window_rows = tile_origins(rows, cfg.window[0])
    col_origins, window_cols = tile_origins(cols, cfg.window[1])
    origins = [(row0, col0) for row0 in row_origins for col0 in col_origins]
    triples = []
    for window, (row0, col0) in enumerate(origins):
        patch_set = patches_from_stack(
            stack[:, row0:row0 + window_rows, col0:col0 + window_cols],
            omega[row0:row0 + window_rows, col0:col0 + window_cols],
            cfg.patch,
            cfg.effective_stride,
        )
        exemplars = choose_exemplars(patch_set, cfg)
        if len(exemplars) >= 2:
            groups = classify_2dqpca(patch_set, exemplars, cfg)
        else:
            groups = [whole_window_group(patch_set)]
        triples.extend((window, (row0, col0), group) for group in groups)
    return triples


class LRLRQTCSolver(Solver):
    """
    Low-rank learning completion of a 3-mode tensor.

    Each slice orientation with a positive weight is cut into windows; the patches of a window are grouped around
    exemplars, every group matrix is completed by the matrix solver, and the groups are written back with overlap
    averaging. The orientations' reconstructions are combined with their weights.
    """
    NAME = 'lrl-rqtc'
    GROUP_FORMAT = '%(orientation)s slices: %(groups)d patch groups'
    FLAGGED_FORMAT = '%(orientation)s window %(window)d: group of exemplar %(exemplar)d has no observed entries'

    def __init__(self, patch_config=None, group_solver=None):
        """
        :param patch_config:
            Patch-learning configuration; defaults when None.
        :type patch_config:
            :class:`PatchConfig` or None
        :param group_solver:
            Matrix solver applied to every group matrix; a :class:`QMCSolver` when None.
        :type group_solver:
            :class:`Solver` or None
        """
        super(LRLRQTCSolver, self).__init__()
        self._config = patch_config or PatchConfig()
        self._group_solver = group_solver or QMCSolver()
        self._logger = getLogger(__name__)

    @property
    def patch_config(self):
        return self._config

    @solver_call
    def solve(self, observed, mask, params):
        """Base class override.

        :type observed:     :class:`QTensor` with three modes
        :rtype:             :class:`SolveReport` whose parts are :class:`QTensor`
        """
        if observed.order != 3:
            raise DimensionMismatchException('lrl_rqtc_solve', expected='3 modes', actual=observed.dims)
        omega = observed_set(mask, observed.dims)
        stack = np.where(omega, complex_stack(observed), 0)
        low_rank = np.zeros_like(stack)
        sparse = np.zeros_like(stack)
        reports, flagged = [], []
        group_count = 0
        for orientation, weight in self._config.orientations():
            axes = ORIENTATION_AXES[orientation]
            stack_axes = (0,) + tuple(axis + 1 for axis in axes)
            back_axes = (0,) + tuple(int(axis) + 1 for axis in np.argsort(axes))
            jobs, results = self._solve_orientation(
                orientation,
                np.transpose(stack, stack_axes),
                np.transpose(omega, axes),
                params,
            )
            oriented_dims = tuple(omega.shape[axis] for axis in axes)
            accumulators = (PatchAccumulator(oriented_dims), PatchAccumulator(oriented_dims))
            for job, result in zip(jobs, results):
                if result.report is None:
                    # flagged groups carry no estimate and stay out of the overlap average
                    flagged.append((str(job.orientation), job.window, job.group.exemplar))
                    continue
                accumulators[0].add_group(job.origin, job.group, result.low_rank)
                accumulators[1].add_group(job.origin, job.group, result.sparse)
                reports.append(result.report)
            group_count += len(jobs)
            low_rank = low_rank + weight * np.transpose(accumulators[0].result(), back_axes)
            sparse = sparse + weight * np.transpose(accumulators[1].result(), back_axes)
        return SolveReport(
            low_rank=QTensor.from_complex_pair(low_rank[0], low_rank[1]),
            sparse=QTensor.from_complex_pair(sparse[0], sparse[1]),
            iterations=max([report.iterations for report in reports] or [0]),
            residual_history=merge_histories([report.residual_history for report in reports]),
            converged=all(report.converged for report in reports),
            solver=self.NAME,
            group_count=group_count,
            flagged_groups=flagged,
        )

    def _solve_orientation(self, orientation, stack, omega, params):
        jobs = [
            _GroupJob(orientation, window, origin, group)
            for window, origin, group in window_groups(stack, omega, self._config)
        ]
        self._logger.debug(self.GROUP_FORMAT, {'orientation': orientation, 'groups': len(jobs)})
        if params.workers > 1:
            with ThreadPoolExecutor(params.workers) as executor:
                results = list(executor.map(lambda job: self._solve_group(job, params), jobs))
        else:
            results = [self._solve_group(job, params) for job in jobs]
        return jobs, results

    def _solve_group(self, job, params):
        group = job.group
        stack = complex_stack(group.matrix)
        if not np.any(group.observed):
            self._logger.warning(self.FLAGGED_FORMAT, {
                'orientation': job.orientation,
                'window': job.window,
                'exemplar': group.exemplar,
            })
            return _GroupResult(stack, np.zeros_like(stack), None)
        # automatic λ and μ resolve per group from its own shape, observed ratio and data
        report = self._group_solver.solve(group.matrix, group.observed, params)
        return _GroupResult(complex_stack(report.low_rank), complex_stack(report.sparse), report)


def lrl_rqtc_solve(observed, mask, cfg=None, params=None):
    """
    Complete a color video by low-rank learning over patch groups.

    :param observed:    Observed 3-mode tensor, zero off Ω.
    :type observed:     :class:`QTensor`
    :param mask:        The observed set.
    :type mask:         :class:`ObsMask`
    :param cfg:         Patch-learning configuration.
    :type cfg:          :class:`PatchConfig` or None
    :param params:      Parameters of every group solve.
    :type params:       :class:`SolveParams` or None
    :rtype:             :class:`SolveReport`
    """
    return LRLRQTCSolver(cfg).solve(observed, mask, params or SolveParams())


