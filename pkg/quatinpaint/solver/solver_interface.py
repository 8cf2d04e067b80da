# coding: utf-8

from __future__ import unicode_literals

from abc import ABCMeta, abstractmethod
from six import add_metaclass


@add_metaclass(ABCMeta)
class Solver(object):
    """
    Abstract base class specifying the interface of a completion solver.
    """
    NAME = None

    @abstractmethod
    def solve(self, observed, mask, params):
        """
        Recover the low-rank and sparse parts of partially observed data.

        :param observed:
            The observed data, zero outside the observed set.
        :type observed:
            :class:`QMat` or :class:`QTensor`
        :param mask:
            The observed set Ω.
        :type mask:
            :class:`ObsMask`
        :param params:
            Solver parameters.
        :type params:
            :class:`SolveParams`
        :rtype:   :class:`SolveReport`
        """
        raise NotImplementedError  # pragma: no cover
