# coding: utf-8

from __future__ import absolute_import, unicode_literals

import numpy as np
import pytest

from quatinpaint.algebra.linalg import ThresholdMode
from quatinpaint.algebra.matrix import QMat
from quatinpaint.algebra.tensor import QTensor, WeightVec
from quatinpaint.config import Solver
from quatinpaint.exception import InvalidArgumentException
from quatinpaint.solver.params import (
    AUTO, AVERAGED, LAverage, SolveParams, UpdateOrder, averaged_lambda, default_lambda, suggest_penalty,
)


def test_defaults():
    params = SolveParams()
    assert params.mu == Solver.MU
    assert params.lam == AUTO
    assert params.tol == 1e-4
    assert params.max_iter == 500
    assert params.threshold_mode == ThresholdMode.SOFT
    assert params.l_average == LAverage.ALL
    assert params.update_order == UpdateOrder.STANDARD
    assert params.betas(3) == (Solver.MU,) * 3
    assert tuple(params.weights(3)) == pytest.approx((1 / 3.0,) * 3)


def test_text_values_are_parsed():
    params = SolveParams(lam=' Auto ', threshold_mode='HARD', l_average='active', update_order='listing', alpha=[1, 0, 0])
    assert params.lam == AUTO
    assert params.threshold_mode == ThresholdMode.HARD
    assert params.l_average == LAverage.ACTIVE
    assert params.update_order == UpdateOrder.LISTING
    assert isinstance(params.alpha, WeightVec)


def test_scalar_and_per_mode_betas():
    assert SolveParams(beta=0.5).betas(2) == (0.5, 0.5)
    assert SolveParams(beta=[0.1, 0.2, 0.3]).betas(3) == (0.1, 0.2, 0.3)
    with pytest.raises(InvalidArgumentException):
        SolveParams(beta=[0.1, 0.2]).betas(3)


def test_weights_must_match_order():
    with pytest.raises(InvalidArgumentException):
        SolveParams(alpha=(0.5, 0.5)).weights(3)


@pytest.mark.parametrize('kwargs', [
    {'mu': 0},
    {'mu': -1e-2},
    {'mu': 'fast'},
    {'mu': 'averaged'},
    {'lam': 0},
    {'lam': 'sometimes'},
    {'lam': -0.5},
    {'beta': [0.1, -0.1]},
    {'tol': 0},
    {'max_iter': 0},
    {'workers': 0},
    {'threshold_mode': 'medium'},
    {'alpha': (0.6, 0.6)},
])
def test_invalid_parameters_are_rejected(kwargs):
    with pytest.raises((InvalidArgumentException, ValueError)):
        SolveParams(**kwargs)


def test_sparsity_weight_resolves_auto():
    assert SolveParams().sparsity_weight((4, 4, 4), 0.25, WeightVec.uniform(3)) == pytest.approx(1 / 6.0)
    assert SolveParams(lam=0.3).sparsity_weight((4, 4, 4), 0.25, WeightVec.uniform(3)) == 0.3


def test_sparsity_weight_resolves_averaged():
    params = SolveParams(lam=' Averaged')
    assert params.lam == AVERAGED
    assert params.sparsity_weight((4, 4, 4), 0.25, WeightVec.uniform(3)) == pytest.approx(0.5)


def test_automatic_penalty_resolves_from_data():
    params = SolveParams(mu='AUTO')
    assert params.mu == AUTO
    assert params.penalty(QMat.from_real(np.ones((2, 2)))) == pytest.approx(0.25)
    assert params.betas(2, 0.25) == (0.25, 0.25)
    assert SolveParams(mu=0.3).penalty(QMat.from_real(np.ones((2, 2)))) == 0.3
    assert SolveParams(mu=0.3, beta=0.1).betas(2, 0.25) == (0.1, 0.1)


def test_as_dict_is_plain():
    values = SolveParams(alpha=(0.5, 0.5), threshold_mode='hard').as_dict()
    assert values['alpha'] == [0.5, 0.5]
    assert values['threshold_mode'] == 'hard'
    assert values['lam'] == 'auto'
    assert type(values['update_order']) is str


@pytest.mark.parametrize('size', [3, 5, 10])
def test_default_lambda_one_hot_cube(size):
    assert default_lambda((size, size, size), 1.0, WeightVec.one_hot(3, 1)) == pytest.approx(1.0 / size)


def test_default_lambda_uniform_weights():
    assert default_lambda((4, 4, 4), 0.25, WeightVec.uniform(3)) == pytest.approx(1 / 6.0)


def test_default_lambda_matrix_case():
    rows, cols, rho = 6, 10, 0.5
    assert default_lambda((rows, cols), rho, (1.0, 0.0)) == pytest.approx(1.0 / np.sqrt(rho * max(rows, cols)))


@pytest.mark.parametrize('size', [3, 5, 10])
def test_averaged_lambda_equals_default_for_one_hot_weights(size):
    dims, one_hot = (size, size, size), WeightVec.one_hot(3, 2)
    assert averaged_lambda(dims, 1.0, one_hot) == pytest.approx(default_lambda(dims, 1.0, one_hot))


def test_averaged_lambda_uniform_weights():
    uniform = WeightVec.uniform(3)
    assert averaged_lambda((4, 4, 4), 0.25, uniform) == pytest.approx(0.5)
    assert averaged_lambda((4, 4, 4), 0.25, uniform) == pytest.approx(3 * default_lambda((4, 4, 4), 0.25, uniform))


@pytest.mark.parametrize('rho', [0.0, -0.5, 1.5])
def test_default_lambda_rejects_bad_ratio(rho):
    with pytest.raises(InvalidArgumentException):
        default_lambda((4, 4, 4), rho, WeightVec.uniform(3))


def test_default_lambda_rejects_weight_count():
    with pytest.raises(InvalidArgumentException):
        default_lambda((4, 4, 4), 0.5, (0.5, 0.5))


def test_suggest_penalty():
    assert suggest_penalty(QMat.from_real(np.ones((2, 2)))) == pytest.approx(0.25)
    assert suggest_penalty(QTensor.zeros((2, 2, 2))) == Solver.MU
