# coding: utf-8

from __future__ import absolute_import, unicode_literals

import pytest

from quatinpaint.synth.planted import make_planted_problem, make_video_problem


@pytest.fixture(scope='module')
def planted_tensor_problem():
    return make_planted_problem((20, 20, 20), (2, 2, 2), rho=0.9, gamma=0.05, seed=3)


@pytest.fixture(scope='module')
def smooth_video_problem():
    return make_video_problem((32, 32, 8), rho=0.5, gamma=0.1, seed=11)
