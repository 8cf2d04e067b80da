# coding: utf-8

from __future__ import unicode_literals, absolute_import

import numpy as np


class PatchAccumulator(object):
    """
    Inverse of the group decomposition: writes group-matrix columns back to their pixels and averages
    overlapping contributions with uniform weights.
    """

    def __init__(self, dims):
        super(PatchAccumulator, self).__init__()
        self._sum = np.zeros((2,) + tuple(dims), dtype=complex)
        self._count = np.zeros(tuple(dims))

    def add_group(self, origin, group, stack):
        """
        :param origin:
            (row, col) of the window inside the slice stack.
        :type origin:
            `tuple`
        :param group:
            The group whose member locations index the columns of `stack`.
        :type group:
            :class:`PatchGroup`
        :param stack:
            Complex stack (2, w·h, dₛ) to scatter.
        :type stack:
            :class:`numpy.ndarray`
        """
        row0, col0 = origin
        width, height = group.patch_shape
        for column, (i, j, frame) in enumerate(group.locations):
            patch = stack[:, :, column].reshape(2, height, width).transpose(0, 2, 1)
            rows = slice(row0 + i, row0 + i + width)
            cols = slice(col0 + j, col0 + j + height)
            self._sum[:, rows, cols, frame] += patch
            self._count[rows, cols, frame] += 1

    @property
    def coverage(self):
        return self._count

    def result(self):
        """Averaged stack; pixels no patch reached are zero."""
        return self._sum / np.where(self._count > 0, self._count, 1.0)
