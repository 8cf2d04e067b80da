# coding: utf-8

from __future__ import unicode_literals, absolute_import, division

import csv
import io
import json

import attr
import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ..config import Metrics
from ..exception import DimensionMismatchException, InvalidArgumentException


def _channels(frame):
    """The three imaginary planes (R, G, B) of a pure-quaternion frame or tensor."""
    return np.stack([np.asarray(frame.x), np.asarray(frame.y), np.asarray(frame.z)])


def _check_pair(operation, ref, rec):
    if tuple(ref.shape) != tuple(rec.shape):
        raise DimensionMismatchException(operation, expected=tuple(ref.shape), actual=tuple(rec.shape))


def psnr(ref, rec, peak=Metrics.PEAK):
    """
    Peak signal-to-noise ratio in dB over the three color channels.

    :param ref:     Reference frame (or tensor) on the 0..`peak` pixel scale.
    :param rec:     Reconstruction of the same shape.
    :returns:       10·log₁₀(peak²/MSE), or ``inf`` when the two are equal.
    """
    _check_pair('psnr', ref, rec)
    mse = float(np.mean((_channels(ref) - _channels(rec)) ** 2))
    if mse == 0:
        return float('inf')
    return float(10 * np.log10(peak ** 2 / mse))


def luminance(frame):
    red, green, blue = _channels(frame)
    weight_r, weight_g, weight_b = Metrics.LUMA
    return weight_r * red + weight_g * green + weight_b * blue


def ssim(ref, rec, window=Metrics.SSIM_WINDOW, peak=Metrics.PEAK):
    """
    Mean structural similarity of the luminance of two frames over all `window`×`window` positions.

    :param ref:     Reference frame, a 2-D :class:`QMat`.
    :param rec:     Reconstruction of the same shape.
    :raises:        :class:`InvalidArgumentException` if the frame is smaller than the window.
    """
    _check_pair('ssim', ref, rec)
    if len(ref.shape) != 2:
        raise DimensionMismatchException('ssim', expected='a 2-D frame', actual=tuple(ref.shape))
    if min(ref.shape) < window:
        raise InvalidArgumentException('window', window, 'frame {0} is smaller than the window'.format(tuple(ref.shape)))
    c1 = (Metrics.K1 * peak) ** 2
    c2 = (Metrics.K2 * peak) ** 2
    first = sliding_window_view(luminance(ref), (window, window))
    second = sliding_window_view(luminance(rec), (window, window))
    mean_first = first.mean(axis=(-2, -1))
    mean_second = second.mean(axis=(-2, -1))
    var_first = (first * first).mean(axis=(-2, -1)) - mean_first ** 2
    var_second = (second * second).mean(axis=(-2, -1)) - mean_second ** 2
    covariance = (first * second).mean(axis=(-2, -1)) - mean_first * mean_second
    numerator = (2 * mean_first * mean_second + c1) * (2 * covariance + c2)
    denominator = (mean_first ** 2 + mean_second ** 2 + c1) * (var_first + var_second + c2)
    return float(np.mean(numerator / denominator))


def rel_error(ref, rec):
    """‖rec − ref‖F / ‖ref‖F."""
    _check_pair('rel_error', ref, rec)
    reference = ref.norm()
    if reference == 0:
        raise InvalidArgumentException('ref', ref, 'reference has zero norm')
    return (rec - ref).norm() / reference


@attr.s(slots=True, frozen=True)
class QualityReport(object):
    """
    :param psnr:        Per-frame PSNR in dB.
    :param ssim:        Per-frame SSIM.
    :param rel_error:   Relative Frobenius error of the whole tensor.
    """
    psnr = attr.ib(converter=tuple)
    ssim = attr.ib(converter=tuple)
    rel_error = attr.ib(converter=float)

    @property
    def mean_psnr(self):
        return float(np.mean(self.psnr))

    @property
    def mean_ssim(self):
        return float(np.mean(self.ssim))

    def to_dict(self):
        return {
            'psnr': list(self.psnr),
            'ssim': list(self.ssim),
            'mean_psnr': self.mean_psnr,
            'mean_ssim': self.mean_ssim,
            'rel_error': self.rel_error,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self):
        """One row per frame, then a 'mean' row."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(['frame', 'psnr', 'ssim'])
        for index, (frame_psnr, frame_ssim) in enumerate(zip(self.psnr, self.ssim)):
            writer.writerow([index, repr(frame_psnr), repr(frame_ssim)])
        writer.writerow(['mean', repr(self.mean_psnr), repr(self.mean_ssim)])
        return buffer.getvalue()


def quality_report(ref, rec, window=Metrics.SSIM_WINDOW):
    """
    Per-frame PSNR and SSIM over the third mode of two color videos, plus their relative error.

    :type ref:  :class:`QTensor`
    :type rec:  :class:`QTensor`
    :rtype:     :class:`QualityReport`
    """
    _check_pair('quality_report', ref, rec)
    frames = list(zip(ref.frames(), rec.frames()))
    return QualityReport(
        psnr=[psnr(first, second) for first, second in frames],
        ssim=[ssim(first, second, window) for first, second in frames],
        rel_error=rel_error(ref, rec),
    )
