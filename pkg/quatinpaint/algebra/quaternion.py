# coding: utf-8

from __future__ import unicode_literals, absolute_import

from math import sqrt
from numbers import Real

import attr


@attr.s(slots=True, frozen=True)
class Quat(object):
    """
    A quaternion scalar w + x·i + y·j + z·k.

    A pure quaternion (w = 0) encodes one RGB pixel as R·i + G·j + B·k.
    """
    w = attr.ib(default=0.0, converter=float)
    x = attr.ib(default=0.0, converter=float)
    y = attr.ib(default=0.0, converter=float)
    z = attr.ib(default=0.0, converter=float)

    def __mul__(self, other):
        if isinstance(other, Real):
            return Quat(self.w * other, self.x * other, self.y * other, self.z * other)
        return qmul(self, other)

    def __rmul__(self, other):
        if isinstance(other, Real):
            return self * other
        return NotImplemented

    def __add__(self, other):
        return Quat(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        return Quat(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self):
        return Quat(-self.w, -self.x, -self.y, -self.z)

    def __abs__(self):
        return sqrt(self.norm_squared())

    def norm_squared(self):
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def conjugate(self):
        return Quat(self.w, -self.x, -self.y, -self.z)

    def as_tuple(self):
        return self.w, self.x, self.y, self.z

    def complex_pair(self):
        """
        The pair (c1, c2) with self = c1 + c2·j, c1 = w + x·i and c2 = y + z·i.

        :rtype:     `tuple` of `complex`
        """
        return complex(self.w, self.x), complex(self.y, self.z)

    @classmethod
    def from_complex_pair(cls, c1, c2):
        return cls(c1.real, c1.imag, c2.real, c2.imag)


def qmul(a, b):
    """
    Hamilton product a·b. Not commutative: i·j = k but j·i = −k.

    :param a:   Left factor.
    :type a:    :class:`Quat`
    :param b:   Right factor.
    :type b:    :class:`Quat`
    :rtype:     :class:`Quat`
    """
    return Quat(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )


I = Quat(x=1.0)
J = Quat(y=1.0)
K = Quat(z=1.0)
ONE = Quat(w=1.0)
