# coding: utf-8

from __future__ import unicode_literals, absolute_import

from .params import AUTO, AVERAGED, LAverage, UpdateOrder, SolveParams, averaged_lambda, default_lambda, suggest_penalty
from .report import SolveReport
from .solver_interface import Solver
from .qmc import QMCSolver, FramewiseQMCSolver, qmc_solve
from .rqtc import RQTCSolver, rqtc_solve
from .lrl_rqtc import LRLRQTCSolver, lrl_rqtc_solve, window_groups
