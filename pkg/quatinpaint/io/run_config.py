# coding: utf-8

from __future__ import unicode_literals, absolute_import

import os
from logging import getLogger

import attr
import six

from ..exception import ConfigurationException, QuatInpaintException
from ..patch.patch_config import PatchConfig
from ..solver.params import SolveParams
from ..util.text_enum import TextEnum


_LOGGER = getLogger(__name__)


class SolverChoice(TextEnum):
    QMC = 'qmc'
    RQTC = 'rqtc'
    LRL_RQTC = 'lrl-rqtc'


SOLVER_KEYS = (
    'mu', 'beta', 'lam', 'alpha', 'tol', 'max_iter', 'threshold_mode', 'l_average', 'update_order', 'workers',
)
PATCH_KEYS = (
    'window', 'patch', 'stride', 'exemplars', 'retained_dims', 'energy', 'slice_weights', 'classifier',
    'min_exemplar_observed',
)
RUN_KEYS = (
    'input', 'output', 'mask', 'rho', 'mask_seed', 'gamma', 'amplitude', 'noise_seed', 'solver',
)
KNOWN_KEYS = RUN_KEYS + SOLVER_KEYS + PATCH_KEYS


def parse_value(text):
    """
    Interpret a config value: comma-separated lists become tuples, numbers become int or float,
    ``none`` becomes None, anything else stays text.
    """
    text = text.strip()
    if ',' in text:
        return tuple(parse_value(item) for item in text.split(',') if item.strip())
    if text.lower() == 'none':
        return None
    for kind in (int, float):
        try:
            return kind(text)
        except ValueError:
            pass
    return text


def parse_config_lines(lines, source=None):
    """
    Parse flat ``key = value`` lines; ``#`` starts a comment.

    :raises:    :class:`ConfigurationException` for malformed lines, repeated or unknown keys.
    """
    values = {}
    for number, line in enumerate(lines, 1):
        content = line.split('#', 1)[0].strip()
        if not content:
            continue
        key, separator, value = content.partition('=')
        key = key.strip().replace('-', '_')
        if not separator or not key:
            raise ConfigurationException('line {0} is not key = value'.format(number), source)
        if key not in KNOWN_KEYS:
            raise ConfigurationException('unknown key', source, key)
        if key in values:
            raise ConfigurationException('repeated key', source, key)
        values[key] = parse_value(value)
    return values


def _optional_text(value):
    return None if value is None else six.text_type(value)


def _optional_float(value):
    return None if value is None or value == 'auto' else float(value)


@attr.s(slots=True, frozen=True)
class RunConfig(object):
    """
    Everything a ``complete`` run needs.

    :param input:
        A tensor container file or a directory of frames.
    :param output:
        Directory receiving L, S, frames and the report.
    :param mask:
        Mask container; when None a mask with ratio `rho` is drawn from `mask_seed`.
    :param gamma:
        Fraction of entries corrupted before solving; 0 leaves the observations clean.
    :param amplitude:
        Corruption amplitude; the largest entry modulus of the input when None.
    """
    input = attr.ib(converter=six.text_type)
    output = attr.ib(converter=six.text_type)
    mask = attr.ib(default=None, converter=_optional_text)
    rho = attr.ib(default=1.0, converter=float)
    mask_seed = attr.ib(default=0, converter=int)
    gamma = attr.ib(default=0.0, converter=float)
    amplitude = attr.ib(default=None, converter=_optional_float)
    noise_seed = attr.ib(default=1, converter=int)
    solver = attr.ib(default=SolverChoice.RQTC, converter=lambda value: SolverChoice.parse(value, 'solver'))
    solve_params = attr.ib(factory=SolveParams)
    patch_config = attr.ib(factory=PatchConfig)
    source = attr.ib(default=None)

    @classmethod
    def from_mapping(cls, values, source=None):
        """
        :raises:
            :class:`ConfigurationException` for unknown keys, missing required keys, out-of-range values
            or referenced files that do not exist.
        """
        unknown = sorted(set(values) - set(KNOWN_KEYS))
        if unknown:
            raise ConfigurationException('unknown key', source, unknown[0])
        for required in ('input', 'output'):
            if values.get(required) is None:
                raise ConfigurationException('missing required key', source, required)
        for key in ('input', 'mask'):
            path = values.get(key)
            if path is not None and not os.path.exists(six.text_type(path)):
                raise ConfigurationException('file {0} does not exist'.format(path), source, key)
        try:
            config = cls(
                solve_params=SolveParams(**{key: values[key] for key in SOLVER_KEYS if values.get(key) is not None}),
                patch_config=PatchConfig(**{key: values[key] for key in PATCH_KEYS if values.get(key) is not None}),
                source=source,
                **{key: values[key] for key in RUN_KEYS if values.get(key) is not None}
            )
        except (QuatInpaintException, TypeError, ValueError) as error:
            six.raise_from(ConfigurationException(six.text_type(error), source), error)
        if not 0 < config.rho <= 1 or not 0 <= config.gamma <= 1:
            raise ConfigurationException('rho must lie in (0, 1] and gamma in [0, 1]', source)
        _LOGGER.debug('Loaded run configuration from %s', source or 'the command line')
        return config

    @classmethod
    def load(cls, path=None, overrides=None):
        """
        Read a config file and apply command-line overrides on top of it.

        :param path:
            Config file, or None to take everything from `overrides`.
        :param overrides:
            Mapping of key to value; None values are ignored.
        """
        values = {}
        if path is not None:
            try:
                with open(path) as stream:
                    values = parse_config_lines(stream, source=path)
            except (IOError, OSError) as error:
                six.raise_from(ConfigurationException('cannot read: {0}'.format(error), path), error)
        values.update({key: value for key, value in (overrides or {}).items() if value is not None})
        return cls.from_mapping(values, source=path)
