# coding: utf-8

from __future__ import unicode_literals, absolute_import, print_function

import argparse
import json
import os
import sys
from logging import getLogger

import numpy as np

from .algebra.linalg import delta_rank, delta_rank_bound, max_column_distance
from .algebra.matrix import QMat, complex_stack
from .algebra.tensor import QTensor, sample, unfold
from .config import Client, Metrics
from .exception import QuatInpaintException
from .io.container import read_mask, read_tensor, write_mask, write_tensor
from .io.frames import load_frames, save_frames
from .io.run_config import KNOWN_KEYS, RunConfig, SolverChoice, parse_value
from .patch.patch_config import PatchConfig
from .quality.metrics import quality_report
from .solver.lrl_rqtc import LRLRQTCSolver, window_groups
from .solver.qmc import FramewiseQMCSolver, QMCSolver
from .solver.rqtc import RQTCSolver
from .synth.incoherence import incoherence
from .synth.planted import gen_mask, gen_sparse, make_planted_problem, make_video_problem
from .util.log import setup_logging
from .version import __version__


_LOGGER = getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_CONVERGED = 2


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with the general error status."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, '{0}: error: {1}\n'.format(self.prog, message))


def _int_tuple(text):
    value = parse_value(text)
    return tuple(int(n) for n in (value if isinstance(value, tuple) else (value,)))


def read_input(path):
    """A tensor container file or a directory of frames."""
    if os.path.isdir(path):
        return load_frames(path)
    return read_tensor(path)


def _write_json(path, content):
    with open(path, 'w') as stream:
        json.dump(content, stream, indent=2, sort_keys=True)
        stream.write('\n')


def _synth(args):
    if args.kind == 'planted':
        problem = make_planted_problem(args.dims, args.ranks, args.rho, args.gamma, args.amplitude, args.seed)
    else:
        amplitude = Metrics.PEAK if args.amplitude is None else args.amplitude
        problem = make_video_problem(args.dims, args.rho, args.gamma, amplitude, args.seed)
    if not os.path.isdir(args.output):
        os.makedirs(args.output)
    write_tensor(os.path.join(args.output, 'truth.qten'), problem.low_rank)
    write_tensor(os.path.join(args.output, 'sparse.qten'), problem.sparse)
    write_tensor(os.path.join(args.output, 'observed.qten'), problem.observed)
    write_mask(os.path.join(args.output, 'mask.qmsk'), problem.mask)
    if args.kind == 'video':
        save_frames(problem.low_rank, os.path.join(args.output, 'truth_frames'))
        save_frames(problem.observed, os.path.join(args.output, 'observed_frames'))
    _LOGGER.info('Wrote %s problem of dims %s to %s', args.kind, tuple(args.dims), args.output)
    return EXIT_OK


def _observations(config):
    data = read_input(config.input)
    if config.mask is not None:
        mask = read_mask(config.mask)
    else:
        mask = gen_mask(data.dims, config.rho, config.mask_seed)
    if config.gamma > 0:
        amplitude = config.amplitude if config.amplitude is not None else float(np.max(data.modulus()))
        data = data + gen_sparse(data.dims, config.gamma, amplitude, config.noise_seed, mask)
    return sample(data, mask), mask


def _solve(config, observed, mask):
    if config.solver == SolverChoice.QMC:
        if observed.order == 2:
            matrix = QMat(observed.w, observed.x, observed.y, observed.z)
            return QMCSolver().solve(matrix, mask.observed, config.solve_params)
        return FramewiseQMCSolver().solve(observed, mask, config.solve_params)
    if config.solver == SolverChoice.RQTC:
        return RQTCSolver().solve(observed, mask, config.solve_params)
    return LRLRQTCSolver(config.patch_config).solve(observed, mask, config.solve_params)


def _as_tensor(part):
    if isinstance(part, QMat):
        return QTensor(part.w, part.x, part.y, part.z)
    return part


def _complete(args):
    overrides = {key: getattr(args, key) for key in KNOWN_KEYS}
    config = RunConfig.load(args.config, overrides)
    observed, mask = _observations(config)
    report = _solve(config, observed, mask)
    low_rank, sparse = _as_tensor(report.low_rank), _as_tensor(report.sparse)
    if not os.path.isdir(config.output):
        os.makedirs(config.output)
    write_tensor(os.path.join(config.output, 'low_rank.qten'), low_rank)
    write_tensor(os.path.join(config.output, 'sparse.qten'), sparse)
    if low_rank.order == 3:
        save_frames(low_rank, os.path.join(config.output, 'frames'))
    content = report.to_dict()
    content['config'] = {
        'input': config.input,
        'solver': str(config.solver),
        'rho': mask.rho,
        'gamma': config.gamma,
        'params': config.solve_params.as_dict(),
        'patch': config.patch_config.as_dict(),
    }
    _write_json(os.path.join(config.output, 'report.json'), content)
    if not report.converged:
        _LOGGER.warning('%s stopped after %d iterations without converging', report.solver, report.iterations)
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def _eval(args):
    report = quality_report(read_input(args.reference), read_input(args.recovered), args.window)
    sys.stdout.write(report.to_csv())
    sys.stdout.write('rel_error,{0!r}\n'.format(report.rel_error))
    if args.csv:
        with open(args.csv, 'w') as stream:
            stream.write(report.to_csv())
    if args.json:
        _write_json(args.json, report.to_dict())
    return EXIT_OK


def _diagnose(args):
    tensor = read_input(args.input)
    content = {
        'dims': list(tensor.dims),
        'incoherence': incoherence(tensor).to_dict(),
        'delta': args.delta,
        'unfoldings': [
            {'mode': mode, 'delta_rank': delta_rank(unfold(tensor, mode), args.delta)}
            for mode in range(1, tensor.order + 1)
        ],
    }
    if tensor.order == 3:
        groups = []
        omega = np.ones(tensor.dims, dtype=bool)
        for window, origin, group in window_groups(complex_stack(tensor), omega, PatchConfig()):
            rows, cols = group.matrix.shape
            if cols < 2 or cols > rows or len(groups) >= args.max_groups:
                continue
            distance = max_column_distance(group.matrix)
            premise = distance <= np.sqrt(2.0) * args.delta
            # the bound only limits the δ-rank when every column pair is within √2·δ
            groups.append({
                'window': window,
                'origin': list(origin),
                'exemplar': int(group.exemplar),
                'size': int(group.size),
                'delta_rank': delta_rank(group.matrix, args.delta),
                'max_column_distance': distance,
                'premise_holds': bool(premise),
                'bound': delta_rank_bound(group.matrix) if premise else None,
            })
        content['groups'] = groups
    text = json.dumps(content, indent=2, sort_keys=True)
    sys.stdout.write(text + '\n')
    if args.json:
        _write_json(args.json, content)
    return EXIT_OK


def build_parser():
    parser = _ArgumentParser(prog=Client.PROG, description='Quaternion tensor completion of color videos.')
    parser.add_argument('--version', action='version', version='%(prog)s {0}'.format(__version__))
    parser.add_argument('--debug', action='store_true', help='Log every ADMM iteration.')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    synth = commands.add_parser('synth', help='Write a synthetic completion problem.')
    synth.add_argument('--kind', choices=('planted', 'video'), default='planted')
    synth.add_argument('--dims', type=_int_tuple, default=(20, 20, 20))
    synth.add_argument('--ranks', type=_int_tuple, default=(2, 2, 2))
    synth.add_argument('--rho', type=float, default=0.9)
    synth.add_argument('--gamma', type=float, default=0.05)
    synth.add_argument('--amplitude', type=float, default=None)
    synth.add_argument('--seed', type=int, default=0)
    synth.add_argument('--output', required=True)
    synth.set_defaults(handler=_synth)

    complete = commands.add_parser('complete', help='Run a solver from a key = value config file.')
    complete.add_argument('config', nargs='?', default=None)
    for key in KNOWN_KEYS:
        complete.add_argument('--{0}'.format(key.replace('_', '-')), dest=key, type=parse_value, default=None)
    complete.set_defaults(handler=_complete)

    evaluate = commands.add_parser('eval', help='PSNR, SSIM and relative error of a recovery.')
    evaluate.add_argument('reference')
    evaluate.add_argument('recovered')
    evaluate.add_argument('--window', type=int, default=Metrics.SSIM_WINDOW)
    evaluate.add_argument('--csv', default=None)
    evaluate.add_argument('--json', default=None)
    evaluate.set_defaults(handler=_eval)

    diagnose = commands.add_parser('diagnose', help='Incoherence, delta-rank and group delta-rank bounds.')
    diagnose.add_argument('input')
    diagnose.add_argument('--delta', type=float, default=1.0)
    diagnose.add_argument('--max-groups', dest='max_groups', type=int, default=20)
    diagnose.add_argument('--json', default=None)
    diagnose.set_defaults(handler=_diagnose)
    return parser


def main(argv=None):
    """
    Entry point of the ``quatinpaint`` command.

    :returns:   0 on success, 2 when a solver stops at the iteration cap, 1 on any error.
    """
    args = build_parser().parse_args(argv)
    setup_logging(sys.stderr, debug=args.debug, name='quatinpaint')
    try:
        return args.handler(args)
    except (QuatInpaintException, IOError, OSError) as error:
        _LOGGER.error('%s', error)
        sys.stderr.write('{0}: error: {1}\n'.format(Client.PROG, error))
        return EXIT_ERROR
