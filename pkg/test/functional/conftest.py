# coding: utf-8

from __future__ import absolute_import, unicode_literals

from mock import patch
import numpy as np
import pytest

from quatinpaint.algebra.tensor import QTensor
from quatinpaint.cli import main
from quatinpaint.io.container import write_tensor


@pytest.fixture(autouse=True)
def quiet_logging():
    # the command installs its stderr handler once per process; pytest swaps stderr between tests
    with patch('quatinpaint.cli.setup_logging'):
        yield


@pytest.fixture
def run_cli():
    def run(*argv):
        return main([str(arg) for arg in argv])
    return run


@pytest.fixture
def flat_video(tmpdir):
    color = np.ones((8, 8, 4))
    path = str(tmpdir.join('flat.qten'))
    write_tensor(path, QTensor.from_rgb(200 * color, 100 * color, 50 * color))
    return path
