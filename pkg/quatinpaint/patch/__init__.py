# coding: utf-8

from __future__ import unicode_literals, absolute_import

from .patch_config import Classifier, PatchConfig, SliceOrientation
from .extraction import PatchSet, extract_patches, tile_origins
from .classification import PatchGroup, choose_exemplars, classify_2dqpca, whole_window_group
from .aggregation import PatchAccumulator
