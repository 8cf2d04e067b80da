# coding: utf-8

from __future__ import unicode_literals, absolute_import

from .container import read_tensor, write_tensor, read_mask, write_mask
from .frames import load_frames, save_frames
from .run_config import RunConfig, SolverChoice, parse_config_lines
