# coding: utf-8

from __future__ import unicode_literals, absolute_import

from numbers import Real

import attr
import numpy as np

from ..config import Numerics
from ..exception import DimensionMismatchException, InvalidArgumentException
from .matrix import NormKind, QMat, qmat_norm


def frozen_volume(value):
    volume = np.array(value, dtype=np.float64, order='F', copy=True)
    volume.setflags(write=False)
    return volume


def frozen_mask(value):
    observed = np.array(value, dtype=bool, order='F', copy=True)
    observed.setflags(write=False)
    return observed


def unfold_array(volume, mode):
    """
    Mode-`mode` unfolding (1-based) of a column-major array.

    Columns are the mode fibers, remaining indices in dictionary order with the lowest surviving mode varying
    fastest. For mode 1 this is a reshape of the storage, not a copy.
    """
    return np.reshape(np.moveaxis(volume, mode - 1, 0), (volume.shape[mode - 1], -1), order='F')


def fold_array(matrix, mode, dims):
    moved = [dims[mode - 1]] + [n for index, n in enumerate(dims) if index != mode - 1]
    return np.moveaxis(np.reshape(matrix, moved, order='F'), 0, mode - 1)


def _check_mode(mode, order):
    if not 1 <= mode <= order:
        raise InvalidArgumentException('mode', mode, 'must lie in 1..{0}'.format(order))


@attr.s(slots=True, frozen=True, eq=False)
class QTensor(object):
    """
    A k-mode quaternion tensor held as four real, column-major component volumes.

    A color video is the pure-quaternion tensor R·i + G·j + B·k of shape (rows, cols, frames).
    """
    w = attr.ib(converter=frozen_volume)
    x = attr.ib(converter=frozen_volume)
    y = attr.ib(converter=frozen_volume)
    z = attr.ib(converter=frozen_volume)

    def __attrs_post_init__(self):
        if self.w.ndim < 2:
            raise DimensionMismatchException('QTensor', expected='at least 2 modes', actual=self.w.shape)
        for volume in (self.x, self.y, self.z):
            if volume.shape != self.w.shape:
                raise DimensionMismatchException('QTensor', expected=self.w.shape, actual=volume.shape)

    @classmethod
    def zeros(cls, dims):
        zero = np.zeros(tuple(dims))
        return cls(zero, zero, zero, zero)

    @classmethod
    def from_complex_pair(cls, c1, c2):
        c1 = np.asarray(c1)
        c2 = np.asarray(c2)
        return cls(c1.real, c1.imag, c2.real, c2.imag)

    @classmethod
    def from_rgb(cls, red, green, blue):
        """Pure-quaternion tensor R·i + G·j + B·k."""
        red = np.asarray(red, dtype=np.float64)
        return cls(np.zeros_like(red), red, green, blue)

    @classmethod
    def from_frames(cls, frames):
        """Stack quaternion matrices along a third mode."""
        frames = list(frames)
        return cls(
            np.stack([frame.w for frame in frames], axis=2),
            np.stack([frame.x for frame in frames], axis=2),
            np.stack([frame.y for frame in frames], axis=2),
            np.stack([frame.z for frame in frames], axis=2),
        )

    @property
    def dims(self):
        return self.w.shape

    shape = dims

    @property
    def order(self):
        return self.w.ndim

    @property
    def size(self):
        return self.w.size

    def complex_pair(self):
        return self.w + 1j * self.x, self.y + 1j * self.z

    def rgb(self):
        return self.x, self.y, self.z

    def frame(self, index):
        """Frontal slice `index` (0-based) of a 3-mode tensor as a :class:`QMat`."""
        return QMat(self.w[:, :, index], self.x[:, :, index], self.y[:, :, index], self.z[:, :, index])

    def frames(self):
        return [self.frame(index) for index in range(self.dims[2])]

    def modulus(self):
        return np.sqrt(self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2)

    def norm(self):
        return float(np.sqrt(np.sum(self.w ** 2) + np.sum(self.x ** 2) + np.sum(self.y ** 2) + np.sum(self.z ** 2)))

    def transpose(self, axes):
        return QTensor(*(np.transpose(volume, axes) for volume in (self.w, self.x, self.y, self.z)))

    def __add__(self, other):
        _check_same_dims('add', self, other)
        return QTensor(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        _check_same_dims('subtract', self, other)
        return QTensor(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __mul__(self, scalar):
        if not isinstance(scalar, Real):
            return NotImplemented
        return QTensor(self.w * scalar, self.x * scalar, self.y * scalar, self.z * scalar)

    __rmul__ = __mul__

    def __repr__(self):
        return '<QTensor {0}>'.format('x'.join(str(n) for n in self.dims))


def _check_same_dims(operation, left, right):
    if tuple(left.dims) != tuple(right.dims):
        raise DimensionMismatchException(operation, expected=tuple(left.dims), actual=tuple(right.dims))


@attr.s(slots=True, frozen=True, eq=False)
class ObsMask(object):
    """
    The observed index set Ω as a boolean volume.
    """
    observed = attr.ib(converter=frozen_mask)

    @classmethod
    def full(cls, dims):
        return cls(np.ones(tuple(dims), dtype=bool))

    @classmethod
    def empty(cls, dims):
        return cls(np.zeros(tuple(dims), dtype=bool))

    @property
    def dims(self):
        return self.observed.shape

    @property
    def count(self):
        return int(np.count_nonzero(self.observed))

    @property
    def rho(self):
        """|Ω| / ∏dims."""
        return self.count / float(self.observed.size)

    def transpose(self, axes):
        return ObsMask(np.transpose(self.observed, axes))

    def __repr__(self):
        return '<ObsMask {0} rho={1:.4f}>'.format('x'.join(str(n) for n in self.dims), self.rho)


def _weights(value):
    return tuple(float(weight) for weight in value)


@attr.s(slots=True, frozen=True)
class WeightVec(object):
    """
    Non-negative mode weights αⱼ summing to one.
    """
    alpha = attr.ib(converter=_weights)

    @alpha.validator
    def _check(self, _attribute, value):
        if not value or any(weight < 0 for weight in value):
            raise InvalidArgumentException('alpha', value, 'weights must be non-negative')
        if abs(sum(value) - 1.0) > Numerics.SUM_TOL:
            raise InvalidArgumentException('alpha', value, 'weights must sum to 1')

    @classmethod
    def uniform(cls, order):
        return cls([1.0 / order] * order)

    @classmethod
    def one_hot(cls, order, mode):
        _check_mode(mode, order)
        return cls([1.0 if index == mode - 1 else 0.0 for index in range(order)])

    @classmethod
    def normalized(cls, weights):
        """Scale non-negative `weights` to sum to one."""
        weights = _weights(weights)
        total = sum(weights)
        if total <= 0 or any(weight < 0 for weight in weights):
            raise InvalidArgumentException('weights', weights, 'need non-negative weights with a positive sum')
        scaled = [weight / total for weight in weights]
        scaled[-1] = 1.0 - sum(scaled[:-1])
        return cls(scaled)

    def active(self):
        """1-based modes with a positive weight."""
        return [index + 1 for index, weight in enumerate(self.alpha) if weight > 0]

    def __len__(self):
        return len(self.alpha)

    def __iter__(self):
        return iter(self.alpha)

    def __getitem__(self, index):
        return self.alpha[index]


def unfold(tensor, mode):
    """
    Mode-j unfolding X_(j), an nⱼ × ∏_{i≠j} nᵢ quaternion matrix.

    :param tensor:  The tensor.
    :type tensor:   :class:`QTensor`
    :param mode:    1-based mode index.
    :type mode:     `int`
    :rtype:         :class:`QMat`
    """
    _check_mode(mode, tensor.order)
    return QMat(*(unfold_array(volume, mode) for volume in (tensor.w, tensor.x, tensor.y, tensor.z)))


def fold(matrix, mode, dims):
    """
    Inverse of :func:`unfold`.

    :raises:    :class:`DimensionMismatchException` if `matrix` is not nⱼ × ∏_{i≠j} nᵢ.
    """
    dims = tuple(int(n) for n in dims)
    _check_mode(mode, len(dims))
    expected = (dims[mode - 1], int(np.prod(dims)) // dims[mode - 1] if dims[mode - 1] else 0)
    if tuple(matrix.shape) != expected:
        raise DimensionMismatchException('fold', expected=expected, actual=tuple(matrix.shape))
    return QTensor(*(fold_array(plane, mode, dims) for plane in (matrix.w, matrix.x, matrix.y, matrix.z)))


def sample(tensor, mask):
    """P_Ω: keep entries on Ω, zero elsewhere."""
    if tuple(tensor.dims) != tuple(mask.dims):
        raise DimensionMismatchException('sample', expected=tuple(tensor.dims), actual=tuple(mask.dims))
    keep = mask.observed
    return QTensor(*(np.where(keep, volume, 0.0) for volume in (tensor.w, tensor.x, tensor.y, tensor.z)))


def snn(tensor, alpha):
    """Sum of nuclear norms Σⱼ αⱼ‖X_(j)‖*."""
    if len(alpha) != tensor.order:
        raise DimensionMismatchException('snn', expected=tensor.order, actual=len(alpha))
    return float(sum(weight * qmat_norm(unfold(tensor, mode), NormKind.NUCLEAR) for mode, weight in zip(
        range(1, tensor.order + 1), alpha,
    ) if weight > 0))


def tensor_l1(tensor):
    """‖X_(1)‖₁, the sum of entry moduli; identical for every unfolding."""
    return float(np.sum(tensor.modulus()))
