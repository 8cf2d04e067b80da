# coding: utf-8

from __future__ import unicode_literals, absolute_import

from .metrics import QualityReport, psnr, ssim, rel_error, luminance, quality_report
