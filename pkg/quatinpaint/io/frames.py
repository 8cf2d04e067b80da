# coding: utf-8

from __future__ import unicode_literals, absolute_import

import os
from logging import getLogger

import numpy as np
import six
from PIL import Image

from ..algebra.tensor import QTensor
from ..config import Container
from ..exception import FrameIOException


_LOGGER = getLogger(__name__)


def list_frames(directory):
    """Image files of `directory` in lexicographic order."""
    try:
        names = os.listdir(directory)
    except (IOError, OSError) as error:
        six.raise_from(FrameIOException(directory, 'cannot list: {0}'.format(error)), error)
    return [
        os.path.join(directory, name)
        for name in sorted(names)
        if os.path.splitext(name)[1].lower() in Container.FRAME_EXTENSIONS
    ]


def _read_rgb(path):
    try:
        with Image.open(path) as image:
            return np.asarray(image.convert('RGB'), dtype=np.float64)
    except (IOError, OSError) as error:
        six.raise_from(FrameIOException(path, 'unreadable image: {0}'.format(error)), error)


def load_frames(directory):
    """
    Read a directory of equal-sized RGB images as a color video R·i + G·j + B·k of shape (rows, cols, frames).

    :raises:
        :class:`FrameIOException` for an empty directory, unreadable files or frames of different sizes.
    """
    paths = list_frames(directory)
    if not paths:
        raise FrameIOException(directory, 'no image frames found')
    frames = []
    for path in paths:
        pixels = _read_rgb(path)
        if frames and pixels.shape != frames[0].shape:
            raise FrameIOException(path, 'frame size {0} differs from {1}'.format(
                pixels.shape[:2], frames[0].shape[:2],
            ))
        frames.append(pixels)
    video = np.stack(frames, axis=2)
    _LOGGER.info('Loaded %d frames of %dx%d from %s', len(frames), video.shape[0], video.shape[1], directory)
    return QTensor.from_rgb(video[:, :, :, 0], video[:, :, :, 1], video[:, :, :, 2])


def to_pixels(values):
    """Clamp to [0, 255] and round half away from zero to 8-bit."""
    return np.floor(np.clip(values, 0, 255) + 0.5).astype(np.uint8)


def save_frames(tensor, directory):
    """
    Write the imaginary channels of a 3-mode tensor as 8-bit RGB PNG frames; the W-volume is ignored.

    :returns:   The written paths.
    :raises:    :class:`FrameIOException` on I/O failure.
    """
    red, green, blue = (to_pixels(channel) for channel in tensor.rgb())
    paths = []
    try:
        if not os.path.isdir(directory):
            os.makedirs(directory)
        for index in range(tensor.dims[2]):
            path = os.path.join(directory, Container.FRAME_PATTERN.format(index))
            pixels = np.stack([red[:, :, index], green[:, :, index], blue[:, :, index]], axis=2)
            Image.fromarray(pixels).save(path)
            paths.append(path)
    except (IOError, OSError) as error:
        six.raise_from(FrameIOException(directory, 'cannot write frames: {0}'.format(error)), error)
    return paths
