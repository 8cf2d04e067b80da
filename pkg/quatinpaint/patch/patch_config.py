# coding: utf-8

from __future__ import unicode_literals, absolute_import

from numbers import Integral

import attr

from ..algebra.tensor import WeightVec
from ..config import Patch
from ..exception import InvalidArgumentException
from ..util.text_enum import TextEnum


class Classifier(TextEnum):
    """Feature space used to assign patches to exemplars."""
    QPCA = '2dqpca'
    DISTANCE = 'distance'


class SliceOrientation(TextEnum):
    HORIZONTAL = 'horizontal'
    LATERAL = 'lateral'
    FRONTAL = 'frontal'


# Axis permutation that turns the slices of each orientation into frontal slices.
ORIENTATION_AXES = {
    SliceOrientation.HORIZONTAL: (1, 2, 0),
    SliceOrientation.LATERAL: (0, 2, 1),
    SliceOrientation.FRONTAL: (0, 1, 2),
}


def _size_pair(value):
    if isinstance(value, Integral):
        return int(value), int(value)
    rows, cols = value
    return int(rows), int(cols)


def _optional_int(value):
    return None if value is None else int(value)


@attr.s(slots=True, frozen=True)
class PatchConfig(object):
    """
    Patch-learning configuration.

    :param window:
        (rows, cols) of each search window; clamped to the slice size.
    :param patch:
        (w, h) patch size.
    :param stride:
        Step between patches; None means ⌊w/2⌋ (at least 1).
    :param exemplars:
        Number ℓ of exemplar patches per window.
    :param retained_dims:
        Number d of eigenvectors kept; None selects the smallest d reaching `energy`.
    :param energy:
        Fraction of the eigenvalue sum the retained eigenvectors must reach.
    :param slice_weights:
        Weights of the horizontal, lateral and frontal slice orientations.
    :param classifier:
        '2dqpca' or 'distance'.
    :param min_exemplar_observed:
        Exemplar candidates with a lower observed fraction are used only when too few others exist.
    """
    window = attr.ib(default=Patch.WINDOW, converter=_size_pair)
    patch = attr.ib(default=Patch.PATCH, converter=_size_pair)
    stride = attr.ib(default=None, converter=_optional_int)
    exemplars = attr.ib(default=Patch.EXEMPLARS, converter=int)
    retained_dims = attr.ib(default=None, converter=_optional_int)
    energy = attr.ib(default=Patch.ENERGY, converter=float)
    slice_weights = attr.ib(default=Patch.SLICE_WEIGHTS, converter=WeightVec.normalized)
    classifier = attr.ib(default=Patch.CLASSIFIER, converter=lambda value: Classifier.parse(value, 'classifier'))
    min_exemplar_observed = attr.ib(default=Patch.MIN_EXEMPLAR_OBSERVED, converter=float)

    def __attrs_post_init__(self):
        if min(self.window) < 1 or min(self.patch) < 1:
            raise InvalidArgumentException('patch', self.patch, 'sizes must be positive')
        if self.patch[0] > self.window[0] or self.patch[1] > self.window[1]:
            raise InvalidArgumentException('patch', self.patch, 'larger than window {0}'.format(self.window))
        if self.stride is not None and self.stride < 1:
            raise InvalidArgumentException('stride', self.stride, 'must be at least 1')
        if self.exemplars < 1:
            raise InvalidArgumentException('exemplars', self.exemplars, 'must be at least 1')
        if self.retained_dims is not None and not 1 <= self.retained_dims <= self.patch[1]:
            raise InvalidArgumentException('retained_dims', self.retained_dims, 'must lie in 1..h')
        if not 0 < self.energy <= 1:
            raise InvalidArgumentException('energy', self.energy, 'must lie in (0, 1]')
        if len(self.slice_weights) != 3:
            raise InvalidArgumentException('slice_weights', self.slice_weights.alpha, 'expected three weights')

    @property
    def effective_stride(self):
        if self.stride is not None:
            return self.stride
        return max(1, self.patch[0] // 2)

    def orientations(self):
        """(orientation, weight) pairs with a positive weight, in horizontal, lateral, frontal order."""
        return [
            (orientation, weight)
            for orientation, weight in zip(SliceOrientation, self.slice_weights)
            if weight > 0
        ]

    def as_dict(self):
        return {
            'window': list(self.window),
            'patch': list(self.patch),
            'stride': self.effective_stride,
            'exemplars': self.exemplars,
            'retained_dims': self.retained_dims,
            'energy': self.energy,
            'slice_weights': list(self.slice_weights),
            'classifier': str(self.classifier),
            'min_exemplar_observed': self.min_exemplar_observed,
        }
