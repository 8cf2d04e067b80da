# coding: utf-8

from __future__ import absolute_import, unicode_literals
from enum import Enum
from six import text_type

from ..exception import InvalidArgumentException


class TextEnum(text_type, Enum):
    def __repr__(self):
        return self._value_  # pylint:disable=no-member

    def __str__(self):
        return str(self.value)  # pylint:disable=no-member

    @classmethod
    def parse(cls, value, name=None):
        """
        Look up a member by its text value, accepting members unchanged.

        :param value:
            A member of this enum or its text value.
        :type value:
            `unicode` or :class:`TextEnum`
        :param name:
            The parameter name reported on failure.
        :type name:
            `unicode` or None
        :raises:
            :class:`InvalidArgumentException` if the value names no member.
        """
        if isinstance(value, cls):
            return value
        try:
            return cls(text_type(value).strip().lower())
        except ValueError:
            raise InvalidArgumentException(
                name or cls.__name__,
                value,
                'expected one of {0}'.format(', '.join(member.value for member in cls)),
            )
