# coding: utf-8

from __future__ import absolute_import, unicode_literals

import json

import numpy as np
import pytest

from quatinpaint.algebra.tensor import QTensor
from quatinpaint.exception import DecompositionException
from quatinpaint.synth.incoherence import incoherence
from quatinpaint.synth.planted import gen_lowrank


@pytest.mark.parametrize('size', [3, 5])
def test_spike_is_maximally_coherent(size):
    spike = np.zeros((size, size, size))
    spike[0, 0, 0] = 1.0
    report = incoherence(QTensor(spike * 0, spike, spike * 0, spike * 0))
    assert report.mu >= size
    for mode in report.modes:
        assert mode.rank == 1
        assert mode.left == pytest.approx(1.0)
        assert mode.right == pytest.approx(1.0)


def test_spread_tensor_is_incoherent():
    ones = np.ones((4, 4, 4))
    report = incoherence(QTensor.from_rgb(ones, ones, ones))
    for mode in report.modes:
        assert mode.rank == 1
        assert mode.mu == pytest.approx(1.0)


def test_overall_mu_bounds_every_constraint():
    report = incoherence(gen_lowrank((6, 5, 4), (2, 2, 2), seed=1))
    assert [mode.rank for mode in report.modes] == [2, 2, 2]
    assert report.mu == max([mode.mu for mode in report.modes] + [report.mutual_mu])
    assert all(mode.mu >= 1.0 - 1e-9 for mode in report.modes)


def test_random_rank_one_tensor_is_less_coherent_than_a_spike():
    spike = np.zeros((8, 8, 8))
    spike[3, 1, 4] = 1.0
    spiky = incoherence(QTensor(spike, spike * 0, spike * 0, spike * 0))
    report = incoherence(gen_lowrank((8, 8, 8), (1, 1, 1), seed=2))
    assert spiky.mu == pytest.approx(64.0)
    assert report.mu < spiky.mu


def test_zero_tensor_is_rejected():
    with pytest.raises(DecompositionException):
        incoherence(QTensor.zeros((2, 2, 2)))


def test_report_serializes():
    values = json.loads(json.dumps(incoherence(gen_lowrank((3, 3, 3), (1, 1, 1), seed=1)).to_dict()))
    assert len(values['modes']) == 3
    assert values['modes'][0]['mode'] == 1
