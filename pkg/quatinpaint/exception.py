# coding: utf-8

from __future__ import unicode_literals

import attr


class QuatInpaintException(Exception):
    """
    Base class exception for all errors raised from the toolkit.
    """
    def __str__(self):
        return '{}'.format(self.__class__.__name__)

    def __repr__(self):
        return '<{}>'.format(self.__class__.__name__)


@attr.s(repr=True, slots=True, frozen=True)
class DimensionMismatchException(QuatInpaintException):
    """
    Exception raised when operands or files disagree in shape.

    :param operation:
        The operation that received the operands, e.g. 'matmul' or 'sample'.
    :type operation:
        `unicode`
    :param expected:
        The shape the operation required.
    :type expected:
        `tuple`
    :param actual:
        The shape that was supplied.
    :type actual:
        `tuple`
    """
    operation = attr.ib()
    expected = attr.ib(default=None)
    actual = attr.ib(default=None)

    def __str__(self):
        return '{self.operation}: expected shape {self.expected}, got {self.actual}'.format(self=self)


@attr.s(repr=True, slots=True, frozen=True)
class InvalidArgumentException(QuatInpaintException):
    """
    Exception raised when a parameter lies outside its documented range.

    :param name:
        The parameter name.
    :type name:
        `unicode`
    :param value:
        The rejected value.
    :param reason:
        What the parameter must satisfy.
    :type reason:
        `unicode`
    """
    name = attr.ib()
    value = attr.ib(default=None)
    reason = attr.ib(default=None)

    def __str__(self):
        return 'Invalid {self.name}={self.value!r}: {self.reason}'.format(self=self)


@attr.s(repr=True, slots=True, frozen=True)
class NotHermitianException(QuatInpaintException):
    """
    Exception raised when an eigendecomposition receives a matrix C with C != C*.

    :param deviation:
        ‖C − C*‖F relative to max(1, ‖C‖F).
    :type deviation:
        `float`
    """
    deviation = attr.ib()

    def __str__(self):
        return 'Matrix is not Hermitian (relative deviation {self.deviation:.3e})'.format(self=self)


@attr.s(repr=True, slots=True, frozen=True)
class DecompositionException(QuatInpaintException):
    """
    Exception raised when the LAPACK routines behind a decomposition fail.

    :param routine:
        The decomposition that failed, e.g. 'svd' or 'eigh'.
    :type routine:
        `unicode`
    :param shape:
        Shape of the quaternion input.
    :type shape:
        `tuple`
    :param reason:
        The message of the underlying error.
    :type reason:
        `unicode`
    """
    routine = attr.ib()
    shape = attr.ib(default=None)
    reason = attr.ib(default=None)

    def __str__(self):
        return '{self.routine} failed on a {self.shape} quaternion matrix: {self.reason}'.format(self=self)


@attr.s(repr=True, slots=True, frozen=True)
class NonFiniteIterateException(QuatInpaintException):
    """
    Exception raised when an ADMM iterate stops being finite.

    :param solver:
        Name of the solver.
    :type solver:
        `unicode`
    :param iteration:
        1-based iteration at which the residuals became non-finite.
    :type iteration:
        `int`
    :param residuals:
        The residual pair of that iteration.
    :type residuals:
        `tuple`
    """
    solver = attr.ib()
    iteration = attr.ib()
    residuals = attr.ib(default=None)

    def __str__(self):
        return '{self.solver}: non-finite iterate at iteration {self.iteration} (residuals {self.residuals})'.format(
            self=self,
        )


@attr.s(repr=True, slots=True, frozen=True)
class ConfigurationException(QuatInpaintException):
    """
    Exception raised for malformed run configurations.

    :param message:
        What is wrong.
    :type message:
        `unicode`
    :param source:
        The config file or 'command line'.
    :type source:
        `unicode` or None
    :param key:
        The offending key.
    :type key:
        `unicode` or None
    """
    message = attr.ib()
    source = attr.ib(default=None)
    key = attr.ib(default=None)

    def __str__(self):
        location = ''
        if self.source is not None:
            location = ' ({0}{1})'.format(self.source, '' if self.key is None else ', key {0!r}'.format(self.key))
        elif self.key is not None:
            location = ' (key {0!r})'.format(self.key)
        return '{0}{1}'.format(self.message, location)


@attr.s(repr=True, slots=True, frozen=True)
class ContainerFormatException(QuatInpaintException):
    """
    Exception raised when a tensor or mask container cannot be read or written.
    """
    path = attr.ib()
    message = attr.ib(default=None)

    def __str__(self):
        return '{self.path}: {self.message}'.format(self=self)


@attr.s(repr=True, slots=True, frozen=True)
class FrameIOException(QuatInpaintException):
    """
    Exception raised when a frame directory cannot be read or written.
    """
    path = attr.ib()
    message = attr.ib(default=None)

    def __str__(self):
        return '{self.path}: {self.message}'.format(self=self)


__all__ = list(map(str, [
    'QuatInpaintException',
    'DimensionMismatchException',
    'InvalidArgumentException',
    'NotHermitianException',
    'DecompositionException',
    'NonFiniteIterateException',
    'ConfigurationException',
    'ContainerFormatException',
    'FrameIOException',
]))
