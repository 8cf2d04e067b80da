# coding: utf-8

from __future__ import unicode_literals, absolute_import

from numbers import Real

import attr
import numpy as np

from ..exception import DimensionMismatchException, InvalidArgumentException
from ..util.text_enum import TextEnum
from .quaternion import Quat


class NormKind(TextEnum):
    L1 = 'l1'
    INF = 'inf'
    FRO = 'fro'
    NUCLEAR = 'nuclear'


def frozen_plane(value):
    """Copy `value` into a read-only, column-major float64 array."""
    plane = np.array(value, dtype=np.float64, order='F', copy=True)
    plane.setflags(write=False)
    return plane


def pair_matmul(a1, a2, b1, b2):
    """
    Quaternion matrix product in complex-pair form, (A1 + A2·j)(B1 + B2·j).

    Works on stacks of matrices through numpy broadcasting.
    """
    return (
        np.matmul(a1, b1) - np.matmul(a2, np.conj(b2)),
        np.matmul(a1, b2) + np.matmul(a2, np.conj(b1)),
    )


def pair_conj_transpose(a1, a2):
    return np.conj(np.swapaxes(a1, -1, -2)), -np.swapaxes(a2, -1, -2)


def pair_modulus(a1, a2):
    return np.sqrt(np.abs(a1) ** 2 + np.abs(a2) ** 2)


def complex_adjoint(a1, a2):
    """
    The complex block matrix [[A1, A2], [−conj(A2), conj(A1)]] of A = A1 + A2·j.

    Its singular values are those of A, each repeated twice.
    """
    return np.block([[a1, a2], [-np.conj(a2), np.conj(a1)]])


@attr.s(slots=True, frozen=True, eq=False)
class QMat(object):
    """
    A dense quaternion matrix A = W + X·i + Y·j + Z·k held as four real planes.

    Planes are immutable, column-major float64 arrays of identical shape.
    """
    w = attr.ib(converter=frozen_plane)
    x = attr.ib(converter=frozen_plane)
    y = attr.ib(converter=frozen_plane)
    z = attr.ib(converter=frozen_plane)

    def __attrs_post_init__(self):
        if self.w.ndim != 2:
            raise DimensionMismatchException('QMat', expected='2-D planes', actual=self.w.shape)
        for plane in (self.x, self.y, self.z):
            if plane.shape != self.w.shape:
                raise DimensionMismatchException('QMat', expected=self.w.shape, actual=plane.shape)

    @classmethod
    def zeros(cls, rows, cols):
        zero = np.zeros((rows, cols))
        return cls(zero, zero, zero, zero)

    @classmethod
    def identity(cls, size):
        zero = np.zeros((size, size))
        return cls(np.eye(size), zero, zero, zero)

    @classmethod
    def from_real(cls, real):
        real = np.asarray(real, dtype=np.float64)
        zero = np.zeros_like(real)
        return cls(real, zero, zero, zero)

    @classmethod
    def from_complex_pair(cls, c1, c2):
        c1 = np.asarray(c1)
        c2 = np.asarray(c2)
        return cls(c1.real, c1.imag, c2.real, c2.imag)

    @classmethod
    def from_rows(cls, rows):
        """
        Build a matrix from nested lists of :class:`Quat` (or real numbers).

        :rtype:     :class:`QMat`
        """
        components = np.array([[_as_quat(entry).as_tuple() for entry in row] for row in rows], dtype=np.float64)
        return cls(components[..., 0], components[..., 1], components[..., 2], components[..., 3])

    @property
    def shape(self):
        return self.w.shape

    @property
    def rows(self):
        return self.w.shape[0]

    @property
    def cols(self):
        return self.w.shape[1]

    def complex_pair(self):
        """
        The complex matrices (A1, A2) with A = A1 + A2·j.

        :rtype:     `tuple` of :class:`numpy.ndarray`
        """
        return self.w + 1j * self.x, self.y + 1j * self.z

    def entry(self, row, col):
        return Quat(self.w[row, col], self.x[row, col], self.y[row, col], self.z[row, col])

    def column(self, col):
        return QMat(self.w[:, col:col + 1], self.x[:, col:col + 1], self.y[:, col:col + 1], self.z[:, col:col + 1])

    def columns(self, start, stop):
        return QMat(self.w[:, start:stop], self.x[:, start:stop], self.y[:, start:stop], self.z[:, start:stop])

    def modulus(self):
        return np.sqrt(self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2)

    def conj_transpose(self):
        return qmat_conj_transpose(self)

    def norm(self, kind=NormKind.FRO):
        return qmat_norm(self, kind)

    def __matmul__(self, other):
        return qmat_matmul(self, other)

    def __add__(self, other):
        _check_same_shape('add', self, other)
        return QMat(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        _check_same_shape('subtract', self, other)
        return QMat(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self):
        return QMat(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, scalar):
        if not isinstance(scalar, Real):
            return NotImplemented
        return QMat(self.w * scalar, self.x * scalar, self.y * scalar, self.z * scalar)

    __rmul__ = __mul__

    def __repr__(self):
        return '<QMat {0}x{1}>'.format(*self.shape)


def _as_quat(entry):
    if isinstance(entry, Quat):
        return entry
    return Quat(w=entry)


def _check_same_shape(operation, left, right):
    if left.shape != right.shape:
        raise DimensionMismatchException(operation, expected=left.shape, actual=right.shape)


def qmat_matmul(a, b):
    """
    Quaternion matrix product; each entry is Σₖ aᵢₖ·bₖⱼ with Hamilton products in factor order.

    :raises:    :class:`DimensionMismatchException` if the inner dimensions disagree.
    :rtype:     :class:`QMat`
    """
    if a.cols != b.rows:
        raise DimensionMismatchException('matmul', expected=(a.cols, None), actual=b.shape)
    a1, a2 = a.complex_pair()
    b1, b2 = b.complex_pair()
    return QMat.from_complex_pair(*pair_matmul(a1, a2, b1, b2))


def qmat_conj_transpose(a):
    """(A*)ᵢⱼ = conj(aⱼᵢ)."""
    return QMat(a.w.T, -a.x.T, -a.y.T, -a.z.T)


def qmat_norm(a, kind=NormKind.FRO):
    """
    Entrywise ℓ1, max-modulus, Frobenius or nuclear norm of a quaternion matrix.

    :param a:
        The matrix.
    :type a:
        :class:`QMat`
    :param kind:
        One of 'l1', 'inf', 'fro', 'nuclear'.
    :type kind:
        :class:`NormKind` or `unicode`
    :rtype:
        `float`
    """
    kind = NormKind.parse(kind, 'kind')
    if kind == NormKind.NUCLEAR:
        # pylint:disable=cyclic-import
        from .linalg import singular_values
        return float(np.sum(singular_values(a)))
    modulus = a.modulus()
    if modulus.size == 0:
        return 0.0
    if kind == NormKind.L1:
        return float(np.sum(modulus))
    if kind == NormKind.INF:
        return float(np.max(modulus))
    if kind == NormKind.FRO:
        return float(np.sqrt(np.sum(a.w ** 2) + np.sum(a.x ** 2) + np.sum(a.y ** 2) + np.sum(a.z ** 2)))
    raise InvalidArgumentException('kind', kind, 'unsupported norm')  # pragma: no cover


def complex_stack(data):
    """A (2, ...) complex array holding the complex pair of a quaternion matrix or tensor."""
    return np.stack(data.complex_pair())
