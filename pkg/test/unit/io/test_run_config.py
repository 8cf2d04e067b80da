# coding: utf-8

from __future__ import absolute_import, unicode_literals

import pytest

from quatinpaint.algebra.linalg import ThresholdMode
from quatinpaint.exception import ConfigurationException
from quatinpaint.io.run_config import RunConfig, SolverChoice, parse_config_lines, parse_value
from quatinpaint.patch.patch_config import Classifier


@pytest.fixture
def input_file(tmpdir):
    path = tmpdir.join('observed.qten')
    path.write_binary(b'')
    return str(path)


@pytest.mark.parametrize('text, expected', [
    ('3', 3),
    (' 1e-4 ', 1e-4),
    ('0.5', 0.5),
    ('auto', 'auto'),
    ('None', None),
    ('1,0,0', (1, 0, 0)),
    ('0.2, 0.3, 0.5', (0.2, 0.3, 0.5)),
    ('8,', (8,)),
    ('lrl-rqtc', 'lrl-rqtc'),
])
def test_parse_value(text, expected):
    assert parse_value(text) == expected


def test_parse_config_lines():
    lines = [
        '# a run',
        'input = data/observed.qten',
        '',
        'max-iter = 100   # cap',
        'alpha = 1, 0, 0',
    ]
    assert parse_config_lines(lines) == {'input': 'data/observed.qten', 'max_iter': 100, 'alpha': (1, 0, 0)}


@pytest.mark.parametrize('lines', [
    ['input'],
    ['= 3'],
    ['colour = red'],
    ['mu = 1', 'mu = 2'],
])
def test_malformed_lines_are_rejected(lines):
    with pytest.raises(ConfigurationException):
        parse_config_lines(lines, source='run.cfg')


def test_exception_names_source_and_key():
    with pytest.raises(ConfigurationException) as exc_info:
        parse_config_lines(['colour = red'], source='run.cfg')
    assert str(exc_info.value) == "unknown key (run.cfg, key 'colour')"


def test_load_file_with_overrides(tmpdir, input_file):
    config_path = tmpdir.join('run.cfg')
    config_path.write('\n'.join([
        'input = {0}'.format(input_file),
        'output = {0}'.format(tmpdir.join('out')),
        'solver = lrl-rqtc',
        'mu = 0.05',
        'lam = auto',
        'threshold_mode = hard',
        'window = 16',
        'patch = 4, 4',
        'classifier = distance',
        'rho = 0.5',
    ]))
    config = RunConfig.load(str(config_path), {'mu': 0.1, 'max_iter': 20, 'gamma': None})
    assert config.solver == SolverChoice.LRL_RQTC
    assert config.solve_params.mu == 0.1
    assert config.solve_params.max_iter == 20
    assert config.solve_params.lam == 'auto'
    assert config.solve_params.threshold_mode == ThresholdMode.HARD
    assert config.patch_config.window == (16, 16)
    assert config.patch_config.patch == (4, 4)
    assert config.patch_config.classifier == Classifier.DISTANCE
    assert config.rho == 0.5
    assert config.gamma == 0.0
    assert config.mask is None
    assert config.source == str(config_path)


def test_overrides_alone(tmpdir, input_file):
    config = RunConfig.load(overrides={'input': input_file, 'output': str(tmpdir), 'amplitude': 'auto'})
    assert config.solver == SolverChoice.RQTC
    assert config.amplitude is None
    assert config.source is None


@pytest.mark.parametrize('values', [
    {'input': None, 'output': 'out'},
    {'output': None},
    {'input': 'missing.qten', 'output': 'out'},
    {'mask': 'missing.qmsk', 'output': 'out'},
    {'solver': 'admm', 'output': 'out'},
    {'mu': -1, 'output': 'out'},
    {'rho': 0, 'output': 'out'},
    {'gamma': 1.5, 'output': 'out'},
    {'patch': (4, 4, 4), 'output': 'out'},
    {'window': 'wide', 'output': 'out'},
    {'colour': 'red', 'output': 'out'},
])
def test_invalid_configurations_are_rejected(tmpdir, input_file, values):
    values = dict(values)
    if 'input' not in values:
        values['input'] = input_file
    if values.get('mask') is not None:
        values['mask'] = str(tmpdir.join(values['mask']))
    with pytest.raises(ConfigurationException):
        RunConfig.from_mapping(values, source='run.cfg')


@pytest.mark.parametrize('required', ['input', 'output'])
def test_missing_required_key_is_named(input_file, required):
    values = {'input': input_file, 'output': 'out'}
    del values[required]
    with pytest.raises(ConfigurationException) as exc_info:
        RunConfig.from_mapping(values, source='run.cfg')
    assert exc_info.value.key == required
    assert exc_info.value.message == 'missing required key'


def test_unreadable_config_file(tmpdir):
    with pytest.raises(ConfigurationException):
        RunConfig.load(str(tmpdir.join('missing.cfg')))
