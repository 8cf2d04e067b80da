# coding: utf-8

from __future__ import unicode_literals, absolute_import

import attr
import numpy as np

from ..algebra.matrix import QMat, complex_stack
from ..algebra.tensor import ObsMask
from ..exception import InvalidArgumentException


def grid_positions(extent, size, stride):
    """
    Stride-spaced start positions of `size`-long segments in `extent`, with the last segment flush with the end.

    :raises:    :class:`InvalidArgumentException` if `size` exceeds `extent`.
    """
    if size > extent:
        raise InvalidArgumentException('patch', size, 'larger than window extent {0}'.format(extent))
    positions = list(range(0, extent - size + 1, stride))
    if positions[-1] != extent - size:
        positions.append(extent - size)
    return positions


def tile_origins(extent, size):
    """Start positions of non-overlapping windows; the last window is moved back to fit."""
    size = min(size, extent)
    origins = list(range(0, extent - size + 1, size))
    if origins[-1] + size < extent:
        origins.append(extent - size)
    return origins, size


@attr.s(slots=True, frozen=True, eq=False)
class PatchSet(object):
    """
    All patches of one window.

    :param locations:
        (i, j, frame) of each patch's top-left pixel, relative to the window, in frame-major order.
    :param data:
        Complex stack of shape (2, n, w, h): the complex pair of every patch.
    :param observed:
        Boolean array (n, w, h) of observed pixels.
    """
    locations = attr.ib(converter=tuple)
    data = attr.ib()
    observed = attr.ib()

    @property
    def patch_shape(self):
        return self.data.shape[2:]

    def __len__(self):
        return len(self.locations)

    def patch(self, index):
        return QMat.from_complex_pair(self.data[0, index], self.data[1, index])

    def observed_fraction(self):
        return self.observed.reshape(len(self), -1).mean(axis=1)


def patches_from_stack(stack, omega, patch, stride):
    """Cut a (2, rows, cols, frames) window stack into a :class:`PatchSet`."""
    width, height = patch
    _, rows, cols, frames = stack.shape
    row_positions = grid_positions(rows, width, stride)
    col_positions = grid_positions(cols, height, stride)
    locations = [
        (i, j, frame)
        for frame in range(frames)
        for i in row_positions
        for j in col_positions
    ]
    data = np.empty((2, len(locations), width, height), dtype=complex)
    observed = np.empty((len(locations), width, height), dtype=bool)
    for index, (i, j, frame) in enumerate(locations):
        data[:, index] = stack[:, i:i + width, j:j + height, frame]
        observed[index] = omega[i:i + width, j:j + height, frame]
    return PatchSet(locations, data, observed)


def extract_patches(window, cfg, mask=None):
    """
    Every stride-spaced w×h patch of every frontal slice of a window; every pixel is covered at least once.

    :param window:
        The window sub-tensor (rows × cols × frames).
    :type window:
        :class:`QTensor`
    :param cfg:
        Patch size and stride.
    :type cfg:
        :class:`PatchConfig`
    :param mask:
        Observed set of the window; None means fully observed.
    :type mask:
        :class:`ObsMask` or None
    :rtype:
        :class:`PatchSet`
    """
    mask = mask or ObsMask.full(window.dims)
    return patches_from_stack(complex_stack(window), mask.observed, cfg.patch, cfg.effective_stride)
