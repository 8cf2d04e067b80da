# coding: utf-8

from __future__ import unicode_literals, absolute_import

from logging import getLogger

import numpy as np
import six

from ..algebra.tensor import ObsMask, QTensor
from ..config import Container
from ..exception import ContainerFormatException


_LOGGER = getLogger(__name__)
_HEADER_DTYPE = np.dtype('<u8')
_VALUE_DTYPE = np.dtype('<f8')
_MASK_DTYPE = np.dtype('u1')


def _header(magic, dims):
    return magic + np.array([len(dims)] + list(dims), dtype=_HEADER_DTYPE).tobytes()


def _write(path, payload):
    try:
        with open(path, 'wb') as stream:
            stream.write(payload)
    except (IOError, OSError) as error:
        six.raise_from(ContainerFormatException(path, 'cannot write: {0}'.format(error)), error)
    _LOGGER.debug('Wrote %d bytes to %s', len(payload), path)


def _read(path, magic, item_size, planes):
    """Parse a container: returns (dims, payload bytes) after checking magic and length."""
    try:
        with open(path, 'rb') as stream:
            content = stream.read()
    except (IOError, OSError) as error:
        six.raise_from(ContainerFormatException(path, 'cannot read: {0}'.format(error)), error)
    if not content.startswith(magic):
        raise ContainerFormatException(path, 'bad magic, expected {0!r}'.format(magic))
    offset = len(magic)
    if len(content) < offset + _HEADER_DTYPE.itemsize:
        raise ContainerFormatException(path, 'truncated header')
    order = int(np.frombuffer(content, dtype=_HEADER_DTYPE, count=1, offset=offset)[0])
    offset += _HEADER_DTYPE.itemsize
    if order < 1 or len(content) < offset + order * _HEADER_DTYPE.itemsize:
        raise ContainerFormatException(path, 'truncated header')
    dims = tuple(int(n) for n in np.frombuffer(content, dtype=_HEADER_DTYPE, count=order, offset=offset))
    offset += order * _HEADER_DTYPE.itemsize
    expected = planes * item_size * int(np.prod(dims))
    if len(content) - offset != expected:
        raise ContainerFormatException(path, 'payload of {0} bytes, expected {1} for dims {2}'.format(
            len(content) - offset, expected, dims,
        ))
    return dims, content[offset:]


def write_tensor(path, tensor):
    """
    Store a tensor as magic, k, dims (little-endian 64-bit) and the W, X, Y, Z volumes as column-major
    little-endian doubles.

    :type tensor:   :class:`QTensor`
    :raises:        :class:`ContainerFormatException` on I/O failure.
    """
    payload = [_header(Container.TENSOR_MAGIC, tensor.dims)]
    for volume in (tensor.w, tensor.x, tensor.y, tensor.z):
        payload.append(np.asarray(volume, dtype=_VALUE_DTYPE).tobytes(order='F'))
    _write(path, b''.join(payload))


def read_tensor(path):
    """
    :rtype:     :class:`QTensor`
    :raises:    :class:`ContainerFormatException` for unreadable files, bad magic or a payload of the wrong length.
    """
    dims, payload = _read(path, Container.TENSOR_MAGIC, _VALUE_DTYPE.itemsize, 4)
    planes = np.frombuffer(payload, dtype=_VALUE_DTYPE).reshape(4, -1)
    return QTensor(*(plane.reshape(dims, order='F') for plane in planes))


def write_mask(path, mask):
    """Store Ω with the tensor header under its own magic, one byte per entry in column-major order."""
    payload = np.asarray(mask.observed, dtype=_MASK_DTYPE).tobytes(order='F')
    _write(path, _header(Container.MASK_MAGIC, mask.dims) + payload)


def read_mask(path):
    """:rtype: :class:`ObsMask`"""
    dims, payload = _read(path, Container.MASK_MAGIC, _MASK_DTYPE.itemsize, 1)
    values = np.frombuffer(payload, dtype=_MASK_DTYPE)
    if np.any(values > 1):
        raise ContainerFormatException(path, 'mask entries must be 0 or 1')
    return ObsMask(values.reshape(dims, order='F').astype(bool))
