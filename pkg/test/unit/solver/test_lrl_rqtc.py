# coding: utf-8

from __future__ import absolute_import, unicode_literals

from mock import Mock
import numpy as np
import pytest

from quatinpaint.algebra.matrix import QMat, complex_stack
from quatinpaint.algebra.tensor import ObsMask, QTensor
from quatinpaint.exception import DimensionMismatchException
from quatinpaint.patch.patch_config import PatchConfig
from quatinpaint.solver.lrl_rqtc import LRLRQTCSolver, lrl_rqtc_solve, window_groups
from quatinpaint.solver.params import SolveParams
from quatinpaint.solver.report import SolveReport
from quatinpaint.solver.solver_interface import Solver
from test.util.random_data import assert_qmat_close, random_qtensor


def _identity_report(matrix, observed, params):
    # pylint:disable=unused-argument
    return SolveReport(
        low_rank=matrix,
        sparse=QMat.zeros(*matrix.shape),
        iterations=1,
        residual_history=[(0.0, 0.0)],
        converged=True,
    )


@pytest.fixture
def identity_solver():
    solver = Mock(Solver)
    solver.solve.side_effect = _identity_report
    return solver


@pytest.fixture
def small_config():
    return PatchConfig(window=8, patch=4, stride=2, exemplars=3)


@pytest.mark.parametrize('slice_weights', [(0, 0, 1), (1, 0, 0), (0, 1, 0), (1, 2, 1)])
def test_pass_through_groups_reassemble_the_observed_tensor(rng, identity_solver, slice_weights):
    tensor = random_qtensor(rng, (8, 8, 8))
    cfg = PatchConfig(window=8, patch=4, stride=2, exemplars=3, slice_weights=slice_weights)
    report = LRLRQTCSolver(cfg, identity_solver).solve(tensor, ObsMask.full(tensor.dims), SolveParams())
    assert_qmat_close(report.low_rank, tensor, atol=1e-12)
    assert report.sparse.norm() == 0
    assert report.converged
    assert report.solver == 'lrl-rqtc'
    assert report.group_count == identity_solver.solve.call_count


def test_unobserved_pixels_stay_zero_with_pass_through_groups(rng, identity_solver, small_config):
    tensor = random_qtensor(rng, (8, 12, 2))
    mask = ObsMask(rng.random((8, 12, 2)) < 0.6)
    report = LRLRQTCSolver(small_config, identity_solver).solve(tensor, mask, SolveParams())
    expected = np.where(mask.observed, tensor.x, 0.0)
    np.testing.assert_allclose(report.low_rank.x, expected, atol=1e-12)


def test_group_without_observed_entries_is_flagged(rng, identity_solver):
    tensor = random_qtensor(rng, (8, 16, 1))
    observed = np.ones((8, 16, 1), dtype=bool)
    observed[:, :8] = False
    cfg = PatchConfig(window=8, patch=4, stride=4, exemplars=1)
    report = LRLRQTCSolver(cfg, identity_solver).solve(tensor, ObsMask(observed), SolveParams())
    assert report.group_count == 2
    assert report.flagged_groups == (('frontal', 0, 0),)
    assert identity_solver.solve.call_count == 1
    assert not report.low_rank.modulus()[:, :8].any()
    np.testing.assert_allclose(report.low_rank.y[:, 8:], tensor.y[:, 8:], atol=1e-12)
    assert report.to_dict()['flagged_groups'] == [['frontal', 0, 0]]


def test_flagged_groups_do_not_dilute_overlapping_estimates():
    tensor = QTensor.from_rgb(np.ones((12, 8, 1)), np.zeros((12, 8, 1)), np.zeros((12, 8, 1)))
    observed = np.zeros((12, 8, 1), dtype=bool)
    observed[8:] = True

    def fill_with_ones(matrix, omega, params):
        report = _identity_report(matrix, omega, params)
        return SolveReport(QMat.from_real(np.ones(matrix.shape)), report.sparse, 1, report.residual_history, True)

    solver = Mock(Solver)
    solver.solve.side_effect = fill_with_ones
    cfg = PatchConfig(window=8, patch=4, stride=4, exemplars=1)
    report = LRLRQTCSolver(cfg, solver).solve(tensor, ObsMask(observed), SolveParams())
    assert report.flagged_groups == (('frontal', 0, 0),)
    # rows 4..7 lie in both windows; only the solved one contributes
    np.testing.assert_allclose(report.low_rank.w[4:], 1.0, atol=1e-12)
    assert not report.low_rank.w[:4].any()


def test_flat_video_is_reproduced():
    color = np.ones((8, 8, 2))
    video = QTensor.from_rgb(200 * color, 100 * color, 50 * color)
    cfg = PatchConfig(window=8, patch=4, stride=2, exemplars=1)
    report = lrl_rqtc_solve(video, ObsMask.full(video.dims), cfg, SolveParams(mu=0.05, max_iter=300))
    assert (report.low_rank - video).norm() <= 1e-2 * video.norm()


def test_worker_threads_match_serial_solve(rng, small_config):
    tensor = random_qtensor(rng, (8, 8, 2))
    mask = ObsMask(rng.random((8, 8, 2)) < 0.8)
    serial = lrl_rqtc_solve(tensor, mask, small_config, SolveParams(mu=0.5, max_iter=5))
    threaded = lrl_rqtc_solve(tensor, mask, small_config, SolveParams(mu=0.5, max_iter=5, workers=3))
    np.testing.assert_array_equal(serial.low_rank.x, threaded.low_rank.x)
    assert serial.residual_history == threaded.residual_history


def test_requires_three_modes(rng):
    tensor = random_qtensor(rng, (8, 8))
    with pytest.raises(DimensionMismatchException):
        lrl_rqtc_solve(tensor, ObsMask.full((8, 8)))


def test_window_groups_partition_every_window(rng, small_config):
    tensor = random_qtensor(rng, (12, 10, 2))
    omega = np.ones((12, 10, 2), dtype=bool)
    triples = window_groups(complex_stack(tensor), omega, small_config)
    windows = sorted({window for window, _, _ in triples})
    assert windows == [0, 1, 2, 3]
    origins = sorted({origin for _, origin, _ in triples})
    assert origins == [(0, 0), (0, 2), (4, 0), (4, 2)]
    for window in windows:
        groups = [group for index, _, group in triples if index == window]
        members = sorted(member for group in groups for member in group.members)
        assert members == list(range(len(members)))
        assert all(group.exemplar in group.members for group in groups)
        assert all(group.matrix.rows == 16 for group in groups)
