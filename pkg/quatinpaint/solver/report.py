# coding: utf-8

from __future__ import unicode_literals, absolute_import

import attr


@attr.s(slots=True, frozen=True, eq=False)
class SolveReport(object):
    """
    Outcome of one solve.

    :param low_rank:
        The recovered low-rank part L (:class:`QMat` or :class:`QTensor`).
    :param sparse:
        The recovered sparse part S.
    :param iterations:
        Iterations run; equals the length of `residual_history`.
    :param residual_history:
        Per-iteration pairs (‖L − P‖F, ‖S − Q‖F), both divided by max(1, ‖X‖F).
    :param converged:
        True iff the final max residual is at most the tolerance.
    """
    low_rank = attr.ib()
    sparse = attr.ib()
    iterations = attr.ib(converter=int)
    residual_history = attr.ib(converter=tuple)
    converged = attr.ib(converter=bool)
    solver = attr.ib(default='')
    lam = attr.ib(default=None)
    mu = attr.ib(default=None)
    elapsed_seconds = attr.ib(default=0.0)
    group_count = attr.ib(default=0)
    flagged_groups = attr.ib(default=(), converter=tuple)

    @property
    def final_residual(self):
        if not self.residual_history:
            return 0.0
        return max(self.residual_history[-1])

    def residual_trend_ok(self, window=20, slack=0.1):
        """True if no max primal residual exceeds the one `window` iterations earlier by more than `slack`."""
        peaks = [max(pair) for pair in self.residual_history]
        return all(later <= (1.0 + slack) * earlier for earlier, later in zip(peaks, peaks[window:]))

    def to_dict(self):
        return {
            'solver': self.solver,
            'iterations': self.iterations,
            'converged': self.converged,
            'final_residual': self.final_residual,
            'lambda': None if self.lam is None else float(self.lam),
            'mu': None if self.mu is None else float(self.mu),
            'elapsed_seconds': self.elapsed_seconds,
            'group_count': self.group_count,
            'flagged_groups': [[str(orientation), int(window), int(exemplar)] for orientation, window, exemplar in self.flagged_groups],
            'residual_history': [[float(value) for value in pair] for pair in self.residual_history],
        }


def merge_histories(histories):
    """Elementwise maximum of residual histories of different lengths."""
    length = max([len(history) for history in histories] or [0])
    merged = []
    for index in range(length):
        live = [history[index] for history in histories if index < len(history)]
        merged.append((max(pair[0] for pair in live), max(pair[1] for pair in live)))
    return tuple(merged)
