# coding: utf-8

from __future__ import unicode_literals, absolute_import

from logging import getLogger
from timeit import default_timer

import attr
import wrapt

from .log import summarize_dictionary


START_FORMAT = '%(solver)s started on %(shape)s with %(params)s'
FINISH_FORMAT = '%(solver)s finished after %(iterations)d iterations in %(elapsed).3fs (converged: %(converged)s)'
EXCEPTION_FORMAT = '%(solver)s failed with %(exc_type_name)s: %(exc_value)s'


@wrapt.decorator
def solver_call(wrapped, instance, args, kwargs):
    """
    Designates the decorated method as a solver entry point.

    The call is logged on the decorated function's module logger, exceptions are logged before being re-raised,
    and the elapsed wall time is stored on the returned :class:`SolveReport`.
    """
    logger = getLogger(wrapped.__module__)
    name = getattr(instance, 'NAME', None) or wrapped.__name__
    observed = args[0] if args else kwargs.get('observed')
    params = args[2] if len(args) > 2 else kwargs.get('params')
    logger.info(START_FORMAT, {
        'solver': name,
        'shape': getattr(observed, 'shape', None),
        'params': summarize_dictionary(params.as_dict()) if hasattr(params, 'as_dict') else params,
    })
    start = default_timer()
    try:
        report = wrapped(*args, **kwargs)
    except Exception as exc:
        logger.warning(EXCEPTION_FORMAT, {'solver': name, 'exc_type_name': type(exc).__name__, 'exc_value': exc})
        raise
    report = attr.evolve(report, elapsed_seconds=default_timer() - start)
    logger.info(FINISH_FORMAT, {
        'solver': name,
        'iterations': report.iterations,
        'elapsed': report.elapsed_seconds,
        'converged': report.converged,
    })
    return report
