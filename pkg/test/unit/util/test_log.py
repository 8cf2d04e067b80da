# coding: utf-8

from __future__ import absolute_import, unicode_literals

import io
import logging

from mock import mock_open, patch, Mock
import numpy as np
import pytest
from six import string_types

import quatinpaint.util.log
from quatinpaint.algebra.matrix import QMat
from quatinpaint.algebra.tensor import QTensor


_MOCK_FILEPATH = '/home/user/quatinpaint.log'
_MOCK_LOG_NAME = 'quatinpaint'


@pytest.fixture(params=[io.StringIO(), _MOCK_FILEPATH])
def stream_or_file(request):
    return request.param


@pytest.fixture(params=[False, True])
def debug(request):
    return request.param


@pytest.fixture
def expected_log_level(debug):
    return logging.DEBUG if debug else logging.INFO


@pytest.fixture(params=[_MOCK_LOG_NAME, None])
def name(request):
    return request.param


@pytest.fixture
def mock_logger():
    return Mock(logging.Logger)


def test_setup_logging(stream_or_file, debug, expected_log_level, name, mock_logger):
    mock_file_open = mock_open()

    with patch('logging.getLogger') as get_logger:
        with patch('logging.open', mock_file_open, create=True):
            get_logger.return_value = mock_logger
            quatinpaint.util.log.Logging().setup_logging(stream_or_file, debug=debug, name=name)
            get_logger.assert_called_once_with(name)

    assert mock_logger.addHandler.call_count == 1
    assert isinstance(mock_logger.addHandler.call_args[0][0], logging.Handler)
    mock_logger.setLevel.assert_called_once_with(expected_log_level)

    if isinstance(stream_or_file, string_types):
        assert mock_file_open.call_count == 1
        assert mock_file_open.call_args[0][:2] == (stream_or_file, 'a')


def test_setup_logging_without_destination_only_sets_level(mock_logger):
    with patch('logging.getLogger') as get_logger:
        get_logger.return_value = mock_logger
        quatinpaint.util.log.Logging().setup_logging(debug=True, name=_MOCK_LOG_NAME)

    mock_logger.addHandler.assert_not_called()
    mock_logger.setLevel.assert_called_once_with(logging.DEBUG)


def test_setup_logging_is_reentrant(mock_logger):
    with patch('logging.getLogger') as get_logger:
        get_logger.return_value = mock_logger
        logging_instance = quatinpaint.util.log.Logging()
        logging_instance.setup_logging(None)
        get_logger.assert_called_once_with(None)
        get_logger.return_value = Mock()
        logging_instance.setup_logging(None)

    assert mock_logger.addHandler.call_count == 1
    assert isinstance(mock_logger.addHandler.call_args[0][0], logging.Handler)
    mock_logger.setLevel.assert_called_once()


@pytest.mark.parametrize(
    'dictionary, expected_result',
    [
        # nothing to summarize
        (
            {'mu': 0.01},
            {'mu': 0.01},
        ),
        # arrays
        (
            {'mask': np.zeros((2, 3), dtype=bool)},
            {'mask': '<ndarray 2x3 bool>'},
        ),
        # quaternion matrices and tensors
        (
            {'observed': QMat.zeros(4, 5), 'stack': {'video': QTensor.zeros((2, 3, 4))}},
            {'observed': '<QMat 4x5>', 'stack': {'video': '<QTensor 2x3x4>'}},
        ),
        # None
        (
            {'lam': None},
            {'lam': None},
        ),
    ]
)
def test_summarize_dictionary(dictionary, expected_result):
    assert quatinpaint.util.log.summarize_dictionary(dictionary) == expected_result


def test_summarize_dictionary_passes_other_values_through():
    assert quatinpaint.util.log.summarize_dictionary(['not', 'a', 'mapping']) == ['not', 'a', 'mapping']
