# coding: utf-8

from __future__ import absolute_import, unicode_literals

from mock import patch
import numpy as np
import pytest

from quatinpaint.algebra.matrix import complex_stack
from quatinpaint.exception import NonFiniteIterateException
from quatinpaint.solver.admm import AdmmEngine, ModeStep, stack_norm
from quatinpaint.solver.params import UpdateOrder
from quatinpaint.synth.planted import gen_lowrank
from test.util.random_data import random_qtensor


def _engine(update_order=UpdateOrder.STANDARD, max_iter=25, steps=None, mu=0.5, workers=1):
    return AdmmEngine(
        'test',
        steps or [ModeStep(mode=mode, tau=1.0 / (3 * mu), beta=mu) for mode in (1, 2, 3)],
        mu=mu,
        lam=0.2,
        tol=1e-12,
        max_iter=max_iter,
        threshold_mode='soft',
        update_order=update_order,
        workers=workers,
    )


@pytest.fixture
def problem(rng):
    tensor = random_qtensor(rng, (4, 5, 3))
    omega = rng.random((4, 5, 3)) < 0.7
    return np.where(omega, complex_stack(tensor), 0), omega


@pytest.mark.parametrize('update_order', list(UpdateOrder))
def test_p_plus_q_matches_observed_data_on_omega(problem, update_order):
    observed, omega = problem
    engine = _engine(update_order)
    p_values, q_values = [], []
    original_s, original_l = AdmmEngine._update_s, AdmmEngine._update_l

    def spy_s(instance, q_var, z_var):
        q_values.append(q_var)
        return original_s(instance, q_var, z_var)

    def spy_l(instance, p_var, *args):
        p_values.append(p_var)
        return original_l(instance, p_var, *args)

    with patch.object(AdmmEngine, '_update_s', autospec=True, side_effect=spy_s):
        with patch.object(AdmmEngine, '_update_l', autospec=True, side_effect=spy_l):
            result = engine.run(observed, omega)
    assert len(p_values) == result.iterations == 25
    if update_order == UpdateOrder.STANDARD:
        pairs = zip(p_values, q_values)
    else:
        # the listing order shrinks the Q of the previous iteration
        pairs = zip(p_values[:-1], q_values[1:])
    for p_var, q_var in pairs:
        gap = (p_var + q_var - observed)[:, omega]
        assert np.max(np.abs(gap)) <= 1e-12


def test_zero_input_converges_immediately():
    observed = np.zeros((2, 3, 4, 2), dtype=complex)
    result = _engine().run(observed, np.ones((3, 4, 2), dtype=bool))
    assert result.iterations == 1
    assert result.converged
    assert stack_norm(result.low_rank) == 0
    assert stack_norm(result.sparse) == 0


def test_residual_history_is_normalized_and_complete(problem):
    observed, omega = problem
    result = _engine(max_iter=7).run(observed, omega)
    assert result.iterations == len(result.residual_history) == 7
    assert not result.converged
    assert all(len(pair) == 2 and min(pair) >= 0 for pair in result.residual_history)


def test_run_is_deterministic(problem):
    observed, omega = problem
    first, second = _engine().run(observed, omega), _engine().run(observed, omega)
    np.testing.assert_array_equal(first.low_rank, second.low_rank)
    np.testing.assert_array_equal(first.sparse, second.sparse)
    assert first.residual_history == second.residual_history


def test_threaded_mode_steps_match_serial(problem):
    observed, omega = problem
    serial = _engine().run(observed, omega)
    threaded = _engine(workers=3).run(observed, omega)
    np.testing.assert_array_equal(serial.low_rank, threaded.low_rank)


def test_zero_threshold_step_passes_shifted_value_through(problem):
    observed, omega = problem
    with patch('quatinpaint.solver.admm.svt_pair') as mock_svt:
        _engine(max_iter=3, steps=[ModeStep(mode=2, tau=0.0, beta=0.5)]).run(observed, omega)
    mock_svt.assert_not_called()


def test_non_finite_iterate_aborts(problem):
    observed, omega = problem
    with patch('quatinpaint.solver.admm.svt_pair', side_effect=lambda a1, a2, tau, mode: (a1 * np.nan, a2 * np.nan)):
        with pytest.raises(NonFiniteIterateException) as exc_info:
            _engine().run(observed, omega)
    assert exc_info.value.iteration == 1
    assert exc_info.value.solver == 'test'


def test_feasibility_holds_with_mode_penalties_unlike_mu(problem):
    observed, omega = problem
    steps = [ModeStep(mode=mode, tau=1.0 / (3 * beta), beta=beta) for mode, beta in zip((1, 2, 3), (0.25, 1.0, 2.0))]
    p_values, q_values = [], []
    original_s, original_l = AdmmEngine._update_s, AdmmEngine._update_l

    def spy_s(instance, q_var, z_var):
        q_values.append(q_var)
        return original_s(instance, q_var, z_var)

    def spy_l(instance, p_var, *args):
        p_values.append(p_var)
        return original_l(instance, p_var, *args)

    with patch.object(AdmmEngine, '_update_s', autospec=True, side_effect=spy_s):
        with patch.object(AdmmEngine, '_update_l', autospec=True, side_effect=spy_l):
            _engine(max_iter=10, steps=steps).run(observed, omega)
    for p_var, q_var in zip(p_values, q_values):
        assert np.max(np.abs((p_var + q_var - observed)[:, omega])) <= 1e-12


@pytest.mark.parametrize('betas', [(1.0, 1.0, 1.0), (0.5, 1.0, 2.0)])
def test_mode_copies_converge_to_a_fully_observed_low_rank_tensor(betas):
    observed = complex_stack(gen_lowrank((6, 6, 6), (1, 1, 1), seed=2))
    omega = np.ones((6, 6, 6), dtype=bool)
    engine = AdmmEngine(
        'test',
        [ModeStep(mode=mode, tau=1.0 / (3 * beta), beta=beta) for mode, beta in zip((1, 2, 3), betas)],
        mu=1.0,
        lam=10.0,
        tol=1e-7,
        max_iter=5000,
        threshold_mode='soft',
        update_order=UpdateOrder.STANDARD,
    )
    result = engine.run(observed, omega)
    assert result.converged
    assert result.residual_history[-1][0] <= 1e-7
    assert stack_norm(result.low_rank - observed) <= 1e-5 * stack_norm(observed)
    assert stack_norm(result.sparse) <= 1e-5
