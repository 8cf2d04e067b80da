# coding: utf-8

from __future__ import absolute_import, unicode_literals

import json

import numpy as np
import pytest

from quatinpaint.algebra.matrix import QMat
from quatinpaint.solver.report import SolveReport, merge_histories


@pytest.fixture
def report():
    return SolveReport(
        low_rank=QMat.zeros(2, 2),
        sparse=QMat.zeros(2, 2),
        iterations=3,
        residual_history=[(0.5, 0.25), (0.1, 0.2), (np.float64(1e-5), 2e-5)],
        converged=True,
        solver='qmc',
        lam=np.float64(0.5),
        mu=np.float64(0.25),
        flagged_groups=[('frontal', np.int64(1), 4)],
    )


def test_final_residual(report):
    assert report.final_residual == 2e-5
    assert SolveReport(None, None, 0, [], False).final_residual == 0.0


def test_to_dict_is_json_serializable(report):
    values = json.loads(json.dumps(report.to_dict()))
    assert values['solver'] == 'qmc'
    assert values['iterations'] == 3
    assert values['converged'] is True
    assert values['lambda'] == 0.5
    assert values['mu'] == 0.25
    assert values['flagged_groups'] == [['frontal', 1, 4]]
    assert len(values['residual_history']) == values['iterations']


def test_residual_trend():
    falling = SolveReport(None, None, 30, [(1.0 / step, 0.0) for step in range(1, 31)], False)
    assert falling.residual_trend_ok()
    rising = SolveReport(None, None, 30, [(float(step), 0.0) for step in range(1, 31)], False)
    assert not rising.residual_trend_ok()
    assert rising.residual_trend_ok(window=40)


def test_merge_histories_takes_elementwise_maximum():
    merged = merge_histories([[(1.0, 0.0), (0.5, 0.5)], [(0.0, 2.0)], []])
    assert merged == ((1.0, 2.0), (0.5, 0.5))
    assert merge_histories([]) == ()
