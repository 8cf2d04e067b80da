# coding: utf-8

from __future__ import unicode_literals, absolute_import

from . import version


class Solver(object):
    """Configuration object containing the ADMM defaults shared by every solver."""
    MU = 1e-2
    TOL = 1e-4
    MAX_ITER = 500
    THRESHOLD_MODE = 'soft'
    L_AVERAGE = 'all'
    UPDATE_ORDER = 'standard'
    WORKERS = 1


class Patch(object):
    """Configuration object containing the patch-learning defaults."""
    WINDOW = (32, 32)
    PATCH = (8, 8)
    EXEMPLARS = 8
    ENERGY = 0.9
    MIN_EXEMPLAR_OBSERVED = 0.5
    SLICE_WEIGHTS = (0.0, 0.0, 1.0)  # horizontal, lateral, frontal
    CLASSIFIER = '2dqpca'


class Metrics(object):
    """Configuration object containing the quality-metric constants."""
    PEAK = 255.0
    SSIM_WINDOW = 8
    K1 = 0.01
    K2 = 0.03
    LUMA = (0.299, 0.587, 0.114)


class Container(object):
    """Configuration object containing the magic strings and names of the on-disk containers."""
    TENSOR_MAGIC = b'QTEN1'
    MASK_MAGIC = b'QMSK1'
    FRAME_PATTERN = 'frame_{0:04d}.png'
    FRAME_EXTENSIONS = ('.png', '.bmp', '.tif', '.tiff', '.jpg', '.jpeg')


class Numerics(object):
    """Configuration object containing the numerical tolerances."""
    RANK_TOL = 1e-12
    HERMITIAN_TOL = 1e-10
    CLUSTER_TOL = 1e-10
    SUM_TOL = 1e-12


class Client(object):
    VERSION = version.__version__
    PROG = 'quatinpaint'
