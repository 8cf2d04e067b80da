# coding: utf-8

from __future__ import unicode_literals, absolute_import

from logging import getLogger

import attr
import numpy as np

from ..algebra.matrix import pair_matmul
from ..algebra.tensor import ObsMask, QTensor, fold_array, sample, unfold_array
from ..config import Metrics
from ..exception import InvalidArgumentException


_LOGGER = getLogger(__name__)


def _dims(dims):
    dims = tuple(int(n) for n in dims)
    if len(dims) < 2 or any(n <= 0 for n in dims):
        raise InvalidArgumentException('dims', dims, 'need at least two positive dimensions')
    return dims


def _ratio(name, value):
    if not 0 <= value <= 1:
        raise InvalidArgumentException(name, value, 'must lie in [0, 1]')
    return float(value)


def _quaternion_gaussian(rng, shape):
    w, x, y, z = rng.standard_normal((4,) + tuple(shape))
    return w + 1j * x, y + 1j * z


def _real_mode_product(volume, factor, mode):
    return np.moveaxis(np.tensordot(factor, volume, axes=(1, mode - 1)), 0, mode - 1)


def gen_lowrank(dims, ranks, seed=None):
    """
    Planted tensor of the requested multilinear ranks, scaled to unit Frobenius norm.

    The core and the mode-1 factor are standard-Gaussian quaternion, the mode-1 factor acting from the left;
    the other factors are real Gaussian so each unfolding is a product whose inner dimension is its rank.

    :param dims:
        Tensor dimensions n₁..n_k.
    :param ranks:
        Multilinear ranks r₁..r_k.
    :param seed:
        Anything :func:`numpy.random.default_rng` accepts.
    :rtype:
        :class:`QTensor`
    :raises:
        :class:`InvalidArgumentException` when some rⱼ exceeds min(nⱼ, ∏ᵢ≠ⱼ nᵢ).
    """
    dims = _dims(dims)
    ranks = tuple(int(r) for r in ranks)
    if len(ranks) != len(dims):
        raise InvalidArgumentException('ranks', ranks, 'expected {0} ranks'.format(len(dims)))
    total = int(np.prod(dims))
    for n, r in zip(dims, ranks):
        if not 1 <= r <= min(n, total // n):
            raise InvalidArgumentException('ranks', ranks, 'infeasible for dims {0}'.format(dims))
    rng = np.random.default_rng(seed)
    c1, c2 = _quaternion_gaussian(rng, ranks)
    u1, u2 = _quaternion_gaussian(rng, (dims[0], ranks[0]))
    shape = (dims[0],) + ranks[1:]
    c1, c2 = (
        fold_array(plane, 1, shape)
        for plane in pair_matmul(u1, u2, unfold_array(c1, 1), unfold_array(c2, 1))
    )
    for mode in range(2, len(dims) + 1):
        factor = rng.standard_normal((dims[mode - 1], ranks[mode - 1]))
        c1 = _real_mode_product(c1, factor, mode)
        c2 = _real_mode_product(c2, factor, mode)
    scale = np.sqrt(np.sum(np.abs(c1) ** 2 + np.abs(c2) ** 2))
    return QTensor.from_complex_pair(c1 / scale, c2 / scale)


def gen_mask(dims, rho, seed=None):
    """Exactly ⌊ρ·∏dims⌋ observed indices drawn uniformly without replacement."""
    dims = _dims(dims)
    total = int(np.prod(dims))
    count = int(np.floor(_ratio('rho', rho) * total))
    rng = np.random.default_rng(seed)
    observed = np.zeros(total, dtype=bool)
    observed[rng.choice(total, size=count, replace=False)] = True
    return ObsMask(observed.reshape(dims, order='F'))


def gen_sparse(dims, gamma, amplitude, seed=None, mask=None):
    """
    Sparse pure-quaternion corruption on exactly ⌊γ·∏dims⌋ observed entries.

    :param amplitude:
        Each imaginary component is uniform on [−amplitude, amplitude].
    :param mask:
        Support of the corruption is drawn among its observed indices; all indices when None.
    :rtype:
        :class:`QTensor`
    """
    dims = _dims(dims)
    if amplitude < 0:
        raise InvalidArgumentException('amplitude', amplitude, 'must be non-negative')
    total = int(np.prod(dims))
    count = int(np.floor(_ratio('gamma', gamma) * total))
    candidates = np.flatnonzero(mask.observed.ravel(order='F')) if mask is not None else np.arange(total)
    if count > len(candidates):
        _LOGGER.warning('Corruption count %d exceeds the %d observed entries; clamped', count, len(candidates))
        count = len(candidates)
    rng = np.random.default_rng(seed)
    support = rng.choice(candidates, size=count, replace=False)
    values = rng.uniform(-amplitude, amplitude, size=(3, count))
    planes = np.zeros((3, total))
    planes[:, support] = values
    red, green, blue = (plane.reshape(dims, order='F') for plane in planes)
    return QTensor.from_rgb(red, green, blue)


def gen_smooth_video(dims, seed=None, components=3):
    """
    Smooth pixel-scale color video: drifting low-frequency sinusoids per channel, values in [16, 240].

    :param dims:
        (rows, cols, frames).
    :param components:
        Sinusoids summed per channel.
    """
    rows, cols, frames = _dims(dims)
    rng = np.random.default_rng(seed)
    grid_i, grid_j, grid_t = np.meshgrid(
        np.arange(rows) / float(rows),
        np.arange(cols) / float(cols),
        np.arange(frames) / float(max(frames, 1)),
        indexing='ij',
    )
    channels = []
    for _ in range(3):
        channel = np.zeros((rows, cols, frames))
        for _ in range(components):
            fi, fj = rng.uniform(0.5, 2.0, size=2)
            drift, phase = rng.uniform(-1.0, 1.0), rng.uniform(0, 2 * np.pi)
            channel += np.sin(2 * np.pi * (fi * grid_i + fj * grid_j + drift * grid_t) + phase)
        channels.append(128.0 + 112.0 * channel / components)
    return QTensor.from_rgb(*channels)


@attr.s(slots=True, frozen=True, eq=False)
class PlantedProblem(object):
    """
    :param low_rank:    Ground truth L₀.
    :param sparse:      Corruption S₀, supported on observed entries.
    :param mask:        Ω.
    :param observed:    X = P_Ω(L₀ + S₀).
    """
    low_rank = attr.ib()
    sparse = attr.ib()
    mask = attr.ib()
    observed = attr.ib()
    ranks = attr.ib(converter=attr.converters.optional(tuple))
    seed = attr.ib()


def _corrupted_problem(truth, ranks, rho, gamma, amplitude, seed, mask_seed, sparse_seed):
    mask = gen_mask(truth.dims, rho, mask_seed)
    if amplitude is None:
        amplitude = float(np.max(truth.modulus()))
    sparse = gen_sparse(truth.dims, gamma, amplitude, sparse_seed, mask)
    return PlantedProblem(
        low_rank=truth,
        sparse=sparse,
        mask=mask,
        observed=sample(truth + sparse, mask),
        ranks=ranks,
        seed=seed,
    )


def make_planted_problem(dims, ranks, rho, gamma, amplitude=None, seed=0):
    """
    Draw a planted completion instance; the three random parts use independent streams spawned from `seed`.

    :param amplitude:
        Corruption amplitude; the largest entry modulus of L₀ when None.
    :rtype:
        :class:`PlantedProblem`
    """
    lowrank_seed, mask_seed, sparse_seed = np.random.SeedSequence(seed).spawn(3)
    truth = gen_lowrank(dims, ranks, lowrank_seed)
    return _corrupted_problem(truth, ranks, rho, gamma, amplitude, seed, mask_seed, sparse_seed)


def make_video_problem(dims, rho, gamma, amplitude=Metrics.PEAK, seed=0):
    """Masked and corrupted :func:`gen_smooth_video` instance; `ranks` of the result is None."""
    video_seed, mask_seed, sparse_seed = np.random.SeedSequence(seed).spawn(3)
    truth = gen_smooth_video(dims, video_seed)
    return _corrupted_problem(truth, None, rho, gamma, amplitude, seed, mask_seed, sparse_seed)
