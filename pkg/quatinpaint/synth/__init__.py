# coding: utf-8

from __future__ import unicode_literals, absolute_import

from .planted import PlantedProblem, gen_lowrank, gen_mask, gen_sparse, gen_smooth_video, make_planted_problem, make_video_problem
from .incoherence import IncoherenceReport, ModeIncoherence, incoherence
