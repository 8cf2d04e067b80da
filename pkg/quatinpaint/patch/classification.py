# coding: utf-8

from __future__ import unicode_literals, absolute_import

from logging import getLogger

import attr
import numpy as np

from ..algebra.linalg import qeig_hermitian
from ..algebra.matrix import QMat, pair_conj_transpose, pair_matmul
from ..exception import InvalidArgumentException
from .patch_config import Classifier


_LOGGER = getLogger(__name__)


@attr.s(slots=True, frozen=True, eq=False)
class PatchGroup(object):
    """
    An exemplar and the patches assigned to it, as the (w·h) × dₛ group matrix.

    :param exemplar:
        Index of the exemplar in its :class:`PatchSet`.
    :param members:
        Patch indices in lexicographic order; the exemplar is one of them.
    :param locations:
        (i, j, frame) of each member, matching the columns of `matrix`.
    :param matrix:
        Column c is the column-major vectorization of member c.
    :param observed:
        Boolean (w·h) × dₛ array of observed entries of `matrix`.
    :param patch_shape:
        (w, h).
    """
    exemplar = attr.ib()
    members = attr.ib(converter=tuple)
    locations = attr.ib(converter=tuple)
    matrix = attr.ib()
    observed = attr.ib()
    patch_shape = attr.ib(converter=tuple)

    @property
    def size(self):
        return len(self.members)

    @property
    def observed_ratio(self):
        return float(np.mean(self.observed))


def _non_overlapping(positions, size):
    taken = []
    for position in positions:
        if not taken or position >= taken[-1] + size:
            taken.append(position)
    return set(taken)


def choose_exemplars(patch_set, cfg):
    """
    Pick up to ℓ pairwise non-overlapping exemplar patches, spread evenly over a non-overlapping grid.

    Candidates observed on at least `min_exemplar_observed` of their pixels are preferred.

    :rtype:     `list` of `int`
    """
    width, height = patch_set.patch_shape
    rows = _non_overlapping(sorted({location[0] for location in patch_set.locations}), width)
    cols = _non_overlapping(sorted({location[1] for location in patch_set.locations}), height)
    candidates = [
        index for index, (i, j, _) in enumerate(patch_set.locations)
        if i in rows and j in cols
    ]
    fractions = patch_set.observed_fraction()
    dense = [index for index in candidates if fractions[index] >= cfg.min_exemplar_observed]
    pool = dense if len(dense) >= min(2, cfg.exemplars) else candidates
    count = min(cfg.exemplars, len(pool))
    if count == 0:
        return []
    picks = np.unique(np.round(np.linspace(0, len(pool) - 1, count)).astype(int))
    return [pool[pick] for pick in picks]


def retained_dimension(eigenvalues, cfg):
    """d: the configured value, or the smallest count whose eigenvalues reach `energy` of the total."""
    if cfg.retained_dims is not None:
        return min(cfg.retained_dims, len(eigenvalues))
    clipped = np.clip(eigenvalues, 0.0, None)
    total = np.sum(clipped)
    if total <= 0:
        return len(eigenvalues)
    reached = np.cumsum(clipped) >= cfg.energy * total * (1.0 - 1e-12)
    return int(np.argmax(reached)) + 1


def _features(patch_set, exemplars, cfg):
    """Exemplar-relative features of every patch; 2DQPCA projections or the raw patches."""
    data = patch_set.data
    if cfg.classifier == Classifier.DISTANCE:
        return data
    count = len(exemplars)
    chosen = data[:, exemplars]
    mean = chosen.mean(axis=1)
    centered = chosen - mean[:, np.newaxis]
    adjoint = pair_conj_transpose(centered[0], centered[1])
    covariance = pair_matmul(adjoint[0], adjoint[1], centered[0], centered[1])
    covariance = QMat.from_complex_pair(covariance[0].sum(axis=0) / (count - 1), covariance[1].sum(axis=0) / (count - 1))
    decomposition = qeig_hermitian(covariance)
    dimension = retained_dimension(decomposition.eigenvalues, cfg)
    v1, v2 = decomposition.vectors.complex_pair()
    _LOGGER.debug('2DQPCA keeps %(kept)d of %(total)d eigenvectors', {'kept': dimension, 'total': len(v1)})
    return np.stack(pair_matmul(data[0] - mean[0], data[1] - mean[1], v1[:, :dimension], v2[:, :dimension]))


def _group(patch_set, exemplar, members):
    members = sorted(members)
    columns = [
        patch_set.data[:, member].transpose(0, 2, 1).reshape(2, -1)
        for member in members
    ]
    stack = np.stack(columns, axis=2)
    observed = np.stack([patch_set.observed[member].T.reshape(-1) for member in members], axis=1)
    return PatchGroup(
        exemplar=exemplar,
        members=members,
        locations=[patch_set.locations[member] for member in members],
        matrix=QMat.from_complex_pair(stack[0], stack[1]),
        observed=observed,
        patch_shape=patch_set.patch_shape,
    )


def classify_2dqpca(patch_set, exemplars, cfg):
    """
    Group the patches of one window around ℓ exemplars.

    With Ψ the exemplar mean and Φₛ = Yₛ − Ψ, the eigenvectors V of C = (1/(ℓ−1))·ΣΦₛ*Φₛ give features
    (Y − Ψ)·V_d; each other patch joins the exemplar with the nearest feature (lowest index on ties).

    :param patch_set:
        Patches of the window.
    :type patch_set:
        :class:`PatchSet`
    :param exemplars:
        Indices of ℓ ≥ 2 exemplar patches.
    :type exemplars:
        `list` of `int`
    :param cfg:
        Retained dimension and classifier.
    :type cfg:
        :class:`PatchConfig`
    :rtype:
        `list` of :class:`PatchGroup`, one per exemplar
    :raises:
        :class:`InvalidArgumentException` if fewer than two exemplars are given.
    """
    exemplars = list(exemplars)
    if len(exemplars) < 2:
        raise InvalidArgumentException('exemplars', len(exemplars), 'need at least two exemplars')
    features = _features(patch_set, exemplars, cfg)
    anchors = features[:, exemplars]
    members = [[exemplar] for exemplar in exemplars]
    chosen = set(exemplars)
    for index in range(len(patch_set)):
        if index in chosen:
            continue
        difference = features[:, index][:, np.newaxis] - anchors
        distances = np.sqrt(np.sum(np.abs(difference) ** 2, axis=(0, 2, 3)))
        members[int(np.argmin(distances))].append(index)
    return [_group(patch_set, exemplar, group) for exemplar, group in zip(exemplars, members)]


def whole_window_group(patch_set):
    """A single group holding every patch of the window."""
    return _group(patch_set, 0, range(len(patch_set)))
