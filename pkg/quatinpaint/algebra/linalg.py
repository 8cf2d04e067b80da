# coding: utf-8

from __future__ import unicode_literals, absolute_import

from itertools import combinations
from logging import getLogger

import attr
import numpy as np
from scipy.linalg import LinAlgError, eigh, svd
from scipy.spatial.distance import pdist
from six import raise_from, text_type

from ..config import Numerics
from ..exception import DecompositionException, DimensionMismatchException, InvalidArgumentException, NotHermitianException
from ..util.text_enum import TextEnum
from .matrix import QMat, complex_adjoint, pair_modulus, qmat_conj_transpose


_LOGGER = getLogger(__name__)


class ThresholdMode(TextEnum):
    SOFT = 'soft'
    HARD = 'hard'


@attr.s(slots=True, frozen=True, eq=False)
class QSvd(object):
    """
    Quaternion singular value decomposition A = U·diag(sigma)·V*.

    :param u:       m×r quaternion-unitary columns.
    :param sigma:   r non-increasing, non-negative singular values.
    :param v:       n×r quaternion-unitary columns.
    """
    u = attr.ib()
    sigma = attr.ib()
    v = attr.ib()

    @property
    def rank(self):
        return len(self.sigma)

    def reconstruct(self):
        u1, u2 = self.u.complex_pair()
        v1, v2 = self.v.complex_pair()
        return _pair_product_with_diagonal(u1, u2, self.sigma, v1, v2)


@attr.s(slots=True, frozen=True, eq=False)
class QEig(object):
    """
    Eigendecomposition C·vₖ = vₖ·λₖ of a Hermitian quaternion matrix, eigenvalues in descending order.
    """
    eigenvalues = attr.ib()
    vectors = attr.ib()


def _pair_product_with_diagonal(u1, u2, sigma, v1, v2):
    """U·diag(sigma)·V* for complex-pair factors, returned as a :class:`QMat`."""
    # U·diag(σ) has pair (U1σ, U2σ); V* has pair (V1ᴴ, −V2ᵀ).
    s1 = u1 * sigma
    s2 = u2 * sigma
    w1 = np.conj(v1.T)
    w2 = -v2.T
    return QMat.from_complex_pair(s1 @ w1 - s2 @ np.conj(w2), s1 @ w2 + s2 @ np.conj(w1))


def _complex_svd(matrix, shape, compute_uv=True):
    """
    LAPACK SVD of the complex embedding, falling back from gesdd to gesvd.

    :raises:    :class:`DecompositionException` when both drivers fail or the input is not finite.
    """
    # LinAlgError subclasses ValueError and must be caught first
    try:
        return svd(matrix, full_matrices=False, compute_uv=compute_uv, lapack_driver='gesdd')
    except LinAlgError:
        _LOGGER.warning('gesdd did not converge on a %(shape)s quaternion matrix, retrying with gesvd', {'shape': shape})
    except ValueError as exc:
        raise_from(DecompositionException('svd', shape, text_type(exc)), exc)
    try:
        return svd(matrix, full_matrices=False, compute_uv=compute_uv, lapack_driver='gesvd')
    except LinAlgError as exc:
        raise_from(DecompositionException('svd', shape, text_type(exc)), exc)


def _partner(vector):
    """The embedding of the same quaternion direction rotated by j; orthogonal to `vector`."""
    half = vector.shape[0] // 2
    return np.concatenate([-np.conj(vector[half:]), np.conj(vector[:half])])


def _residual(candidates, span):
    if span.shape[1] == 0:
        return candidates
    return candidates - span @ (np.conj(span.T) @ candidates)


def _extend_span(span, vector):
    return np.column_stack([span, vector, _partner(vector)])


def _pick_orthogonal(candidates, span, floor=1e-6):
    """Return the normalized candidate with the largest component outside `span`, or None."""
    residual = _residual(candidates, span)
    norms = np.linalg.norm(residual, axis=0)
    if norms.size == 0:
        return None
    best = int(np.argmax(norms))
    if norms[best] < floor:
        return None
    vector = residual[:, best] / norms[best]
    vector = _residual(vector[:, np.newaxis], span)[:, 0]
    return vector / np.linalg.norm(vector)


def _quaternion_basis(vectors, values, count):
    """
    Choose `count` quaternion directions from the columns of a complex-embedding decomposition.

    Columns come sorted by `values`; every value occurs twice. Columns with equal values (within tolerance)
    form one J-invariant subspace, and directions are picked inside it by pivoted Gram-Schmidt against the
    chosen vectors and their partners.
    """
    total = vectors.shape[1]
    scale = max(float(np.max(np.abs(values))) if total else 0.0, np.finfo(float).tiny)
    tolerance = Numerics.CLUSTER_TOL * scale
    span = np.zeros((vectors.shape[0], 0), dtype=complex)
    basis, chosen = [], []
    start = 0
    while start < total and len(basis) < count:
        stop = start + 1
        while stop < total and abs(values[stop] - values[start]) <= tolerance:
            stop += 1
        block = vectors[:, start:stop]
        for pick in range((stop - start + 1) // 2):
            if len(basis) == count:
                break
            vector = _pick_orthogonal(block, span)
            if vector is None:
                break
            basis.append(vector)
            chosen.append(values[min(start + 2 * pick, stop - 1)])
            span = _extend_span(span, vector)
        start = stop
    if len(basis) < count:
        # Numerically split clusters; complete from the remaining columns.
        fallback = np.column_stack([vectors, np.eye(vectors.shape[0], dtype=complex)])
        while len(basis) < count:
            vector = _pick_orthogonal(fallback, span, floor=0.0)
            basis.append(vector)
            chosen.append(values[min(2 * len(chosen), total - 1)] if total else 0.0)
            span = _extend_span(span, vector)
    return basis, np.array(chosen, dtype=np.float64)


def _left_vectors(chi, right, sigma, left_candidates):
    """uₖ = χ(A)·xₖ/σₖ, re-orthogonalized; null directions completed from `left_candidates`."""
    rank_floor = Numerics.RANK_TOL * max(float(sigma[0]) if len(sigma) else 0.0, np.finfo(float).tiny)
    span = np.zeros((chi.shape[0], 0), dtype=complex)
    candidates = np.column_stack([left_candidates, np.eye(chi.shape[0], dtype=complex)])
    left = []
    for vector, value in zip(right, sigma):
        image = None
        if value > rank_floor:
            image = _residual((chi @ vector / value)[:, np.newaxis], span)[:, 0]
            length = np.linalg.norm(image)
            image = image / length if length > 0.5 else None
        if image is None:
            image = _pick_orthogonal(candidates, span, floor=0.0)
        left.append(image)
        span = _extend_span(span, image)
    return left


def _to_pair(embedded, rows):
    """Stack embedded columns [v1; −conj(v2)] back into the pair (V1, V2)."""
    matrix = np.column_stack(embedded) if embedded else np.zeros((2 * rows, 0), dtype=complex)
    return matrix[:rows], -np.conj(matrix[rows:])


def _normalize_phase(first, others):
    """
    Right-multiply column k of every factor by the unit quaternion making the largest-modulus entry of
    column k of `first` real and positive.
    """
    f1, f2 = first
    columns = f1.shape[1]
    if columns == 0:
        return first, others
    peak = np.argmax(pair_modulus(f1, f2), axis=0)
    p1 = f1[peak, np.arange(columns)]
    p2 = f2[peak, np.arange(columns)]
    length = np.sqrt(np.abs(p1) ** 2 + np.abs(p2) ** 2)
    length[length == 0] = 1.0
    q1 = np.conj(p1) / length
    q2 = -p2 / length

    def rotate(pair):
        a1, a2 = pair
        return a1 * q1 - a2 * np.conj(q2), a1 * q2 + a2 * np.conj(q1)

    return rotate(first), [rotate(pair) for pair in others]


def qsvd(a):
    """
    Quaternion SVD through the complex embedding χ(A).

    Singular vectors are fixed up to a common right unit factor by making the largest-modulus entry of each
    left vector real and positive.

    :param a:
        A nonempty quaternion matrix.
    :type a:
        :class:`QMat`
    :rtype:
        :class:`QSvd`
    :raises:
        :class:`DecompositionException` if LAPACK does not converge.
    """
    rows, cols = a.shape
    if rows == 0 or cols == 0:
        raise InvalidArgumentException('a', a, 'matrix must be nonempty')
    a1, a2 = a.complex_pair()
    chi = complex_adjoint(a1, a2)
    left_columns, values, right_rows = _complex_svd(chi, a.shape)
    rank = min(rows, cols)
    right, sigma = _quaternion_basis(np.conj(right_rows.T), values, rank)
    left = _left_vectors(chi, right, sigma, left_columns)
    (u1, u2), [(v1, v2)] = _normalize_phase(_to_pair(left, rows), [_to_pair(right, cols)])
    return QSvd(u=QMat.from_complex_pair(u1, u2), sigma=sigma, v=QMat.from_complex_pair(v1, v2))


def singular_values(a):
    """The min(m, n) singular values of `a`, non-increasing."""
    a1, a2 = a.complex_pair()
    values = _complex_svd(complex_adjoint(a1, a2), a.shape, compute_uv=False)
    return np.array(values[0::2][:min(a.shape)], dtype=np.float64)


def qeig_hermitian(c):
    """
    Eigendecomposition of a Hermitian quaternion matrix through the same complex embedding as :func:`qsvd`.

    :param c:
        Square quaternion matrix with C = C* to within 1e-10 relative.
    :type c:
        :class:`QMat`
    :rtype:
        :class:`QEig`
    :raises:
        :class:`NotHermitianException`, :class:`DimensionMismatchException` or :class:`DecompositionException`.
    """
    size = c.rows
    if c.cols != size:
        raise DimensionMismatchException('qeig_hermitian', expected=(size, size), actual=c.shape)
    deviation = (c - qmat_conj_transpose(c)).norm() / max(1.0, c.norm())
    if deviation > Numerics.HERMITIAN_TOL:
        raise NotHermitianException(deviation)
    c1, c2 = c.complex_pair()
    chi = complex_adjoint(c1, c2)
    chi = (chi + np.conj(chi.T)) / 2
    try:
        values, vectors = eigh(chi)
    except (LinAlgError, ValueError) as exc:
        raise_from(DecompositionException('eigh', c.shape, text_type(exc)), exc)
    order = np.argsort(values, kind='stable')[::-1]
    basis, eigenvalues = _quaternion_basis(vectors[:, order], values[order], size)
    (v1, v2), _ = _normalize_phase(_to_pair(basis, size), [])
    return QEig(eigenvalues=eigenvalues, vectors=QMat.from_complex_pair(v1, v2))


def shrink_pair(a1, a2, tau):
    """Entrywise quaternion soft threshold on complex-pair arrays of any shape."""
    modulus = pair_modulus(a1, a2)
    with np.errstate(divide='ignore', invalid='ignore'):
        scale = np.where(modulus > tau, (modulus - tau) / modulus, 0.0)
    return a1 * scale, a2 * scale


def shrink_q(a, tau):
    """
    Quaternion shrinkage signQ(aᵢⱼ)·max(|aᵢⱼ| − τ, 0), with signQ(0) = 0.

    :param a:       The matrix.
    :type a:        :class:`QMat`
    :param tau:     Threshold τ ≥ 0.
    :type tau:      `float`
    :rtype:         :class:`QMat`
    """
    if tau < 0:
        raise InvalidArgumentException('tau', tau, 'must be non-negative')
    a1, a2 = a.complex_pair()
    return QMat.from_complex_pair(*shrink_pair(a1, a2, tau))


def svt_pair(a1, a2, tau, mode=ThresholdMode.SOFT):
    """
    Singular value thresholding of a quaternion matrix given as a complex pair.

    The embedding is thresholded directly and the quaternion blocks are read back from it; τ = 0 is the identity
    in both modes.
    """
    if tau == 0:
        return a1.copy(), a2.copy()
    rows, cols = a1.shape
    left, values, right = _complex_svd(complex_adjoint(a1, a2), (rows, cols))
    values = np.repeat((values[0::2] + values[1::2]) / 2, 2)
    if mode == ThresholdMode.SOFT:
        values = np.maximum(values - tau, 0.0)
    else:
        values = np.where(values > tau, values, 0.0)
    keep = values > 0
    thresholded = (left[:, keep] * values[keep]) @ right[keep]
    return (
        (thresholded[:rows, :cols] + np.conj(thresholded[rows:, cols:])) / 2,
        (thresholded[:rows, cols:] - np.conj(thresholded[rows:, :cols])) / 2,
    )


def approx_q(a, tau, mode=ThresholdMode.SOFT):
    """
    Quaternion singular value thresholding.

    'soft' returns U·diag(max(σᵢ − τ, 0))·V*, the minimizer of ‖L‖* + ‖L − A‖F²/(2τ). 'hard' keeps the singular
    values above τ unchanged and zeroes the rest.

    :param a:       The matrix.
    :type a:        :class:`QMat`
    :param tau:     Threshold τ ≥ 0.
    :type tau:      `float`
    :param mode:    'soft' or 'hard'.
    :type mode:     :class:`ThresholdMode` or `unicode`
    :rtype:         :class:`QMat`
    """
    if tau < 0:
        raise InvalidArgumentException('tau', tau, 'must be non-negative')
    mode = ThresholdMode.parse(mode, 'mode')
    a1, a2 = a.complex_pair()
    return QMat.from_complex_pair(*svt_pair(a1, a2, tau, mode))


def delta_rank(a, delta):
    """Number of singular values strictly greater than `delta`."""
    if delta < 0:
        raise InvalidArgumentException('delta', delta, 'must be non-negative')
    return int(np.count_nonzero(singular_values(a) > delta))


def max_column_distance(a):
    """Largest ‖aᵢ − aⱼ‖₂ over pairs of columns; 0 when there are fewer than two."""
    if a.cols < 2:
        return 0.0
    columns = np.vstack([a.w, a.x, a.y, a.z]).T
    return float(np.max(pdist(columns)))


def delta_rank_bound(a, pair=None):
    """
    Smallest index r for which a column pair (i, j) satisfies

        Σ_{k<r} (σₖ² − σᵣ²)|wₖ|² ≥ Σ_{k>r} (σᵣ² − σₖ²)|wₖ|²,  w = V*(eᵢ − eⱼ).

    When every pair of columns is within √2·δ of each other, σᵣ ≤ δ and the δ-rank is below r. Without
    `pair`, the minimum over all column pairs is returned.

    :param a:
        Group matrix with no more columns than rows.
    :type a:
        :class:`QMat`
    :param pair:
        0-based column indices (i, j), or None for every pair.
    :type pair:
        `tuple` or None
    :rtype:
        `int`
    """
    decomposition = qsvd(a)
    sigma_squared = decomposition.sigma ** 2
    v1, v2 = decomposition.v.complex_pair()
    pairs = [pair] if pair is not None else list(combinations(range(a.cols), 2))
    if not pairs:
        return decomposition.rank
    best = decomposition.rank
    for i, j in pairs:
        weights = np.abs(v1[i] - v1[j]) ** 2 + np.abs(v2[i] - v2[j]) ** 2
        for index in range(decomposition.rank):
            lower = np.sum((sigma_squared[:index] - sigma_squared[index]) * weights[:index])
            upper = np.sum((sigma_squared[index] - sigma_squared[index + 1:]) * weights[index + 1:])
            if lower >= upper:
                best = min(best, index + 1)
                break
    return best
