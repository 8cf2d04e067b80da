# coding: utf-8

from __future__ import unicode_literals

from collections.abc import Mapping
import logging
from logging import NullHandler
import sys

import numpy as np
from six import string_types, iteritems


_no_logger = object()


class Logging(object):
    _has_setup = False

    def setup_logging(self, stream_or_file=_no_logger, debug=False, name=None):
        if not self._has_setup:
            self._has_setup = True
            self._setup_logging(stream_or_file, debug, name)

    @staticmethod
    def _setup_logging(stream_or_file=_no_logger, debug=False, name=None):
        logger = logging.getLogger(name)
        if isinstance(stream_or_file, string_types):
            logger.addHandler(logging.FileHandler(stream_or_file, mode='a'))
        elif stream_or_file is not _no_logger:
            logger.addHandler(logging.StreamHandler(stream_or_file or sys.stdout))
        logger.setLevel(logging.DEBUG if debug else logging.INFO)

    @staticmethod
    def summarize_value(value):
        shape = getattr(value, 'shape', None)
        dtype = getattr(value, 'dtype', None)
        kind = value.__class__.__name__
        if dtype is None:
            return '<{0} {1}>'.format(kind, 'x'.join(str(n) for n in shape))
        return '<{0} {1} {2}>'.format(kind, 'x'.join(str(n) for n in shape), dtype)

    def summarize_dictionary(self, dictionary):
        if not isinstance(dictionary, Mapping):
            return dictionary
        summarized_dictionary = {}
        for key, value in iteritems(dictionary):
            if isinstance(value, np.ndarray) or _is_quaternion_array(value):
                summarized_dictionary[key] = self.summarize_value(value)
            elif isinstance(value, Mapping):
                summarized_dictionary[key] = self.summarize_dictionary(value)
            else:
                summarized_dictionary[key] = value
        return summarized_dictionary


def _is_quaternion_array(value):
    return hasattr(value, 'complex_pair') and hasattr(value, 'shape')


_logging = Logging()


def setup_logging(stream_or_file=_no_logger, debug=False, name=None):
    """
    Create a logger for communicating with the user or writing to log files.
    Sets the level to INFO or DEBUG, depending on the debug flag.

    If a stream or file is passed (or None is passed to stream_or_file), then
    a handler to that stream or file (stdout for None) is added to the logger.

    :param stream_or_file:
        The destination of the log messages. If None, stdout will be used.
    :type stream_or_file:
        `unicode` or `file` or None
    :param debug:
        Whether or not the logger will be at the DEBUG level (if False, the logger will be at the INFO level).
    :type debug:
        `bool` or None
    :param name:
        The logging channel. If None, a root logger will be created.
    :type name:
        `unicode` or None
    """
    _logging.setup_logging(stream_or_file, debug, name)


def summarize_dictionary(dictionary):
    """
    Get a copy of a dictionary in which array values are replaced by a short shape description. Should be called
    on parameter dictionaries that will be logged or printed.

    :param dictionary:      Dictionary that may hold arrays, quaternion matrices or tensors.
    :type dictionary:       :class:`Mapping`
    :return:                Copy of the dictionary with arrays summarized.
    :rtype:                 `dict`
    """
    return _logging.summarize_dictionary(dictionary)


logging.getLogger(__name__).addHandler(NullHandler())


__all__ = list(map(str, ['setup_logging', 'summarize_dictionary']))
