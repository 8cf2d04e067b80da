# coding: utf-8

from __future__ import unicode_literals, absolute_import

from .algebra import *  # pylint:disable=wildcard-import
from .exception import *  # pylint:disable=wildcard-import
from .patch import PatchConfig
from .quality import QualityReport, psnr, ssim, rel_error, quality_report
from .solver import (
    SolveParams, SolveReport, qmc_solve, rqtc_solve, lrl_rqtc_solve, averaged_lambda, default_lambda, suggest_penalty,
)
from .synth import PlantedProblem, make_planted_problem, incoherence
from .util.log import setup_logging
from .version import __version__
