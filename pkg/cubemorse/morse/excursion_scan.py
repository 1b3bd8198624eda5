# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

"""
    Excursion walls along a finite geodesic segment.

    A sequence of walls crossed at times t_1 < ... < t_m is admissible for
    a constant c when the segment is covered at both ends
    (t_1 <= c kappa(t_1) and T - t_m <= c kappa(T)) and every consecutive
    pair is disjoint with gap t_{i+1} - t_i and well-separation degree both
    at most c kappa(t_{i+1}). ``excursion_scan`` finds the least such c.
"""

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from ..runtime import InputError, ReprDict, get_logger
from ..separation import wall_index, wsep_degree
from .gauge import SublinearGauge


@dataclass(frozen=True)
class ExcursionStep:
    wall: int
    time: int
    gap: int
    wsep: Optional[int]
    bound: Fraction

    def as_dict(self) -> ReprDict:
        return ReprDict(wall=self.wall, time=self.time, gap=self.gap, wsep=self.wsep, bound=self.bound)


@dataclass(frozen=True)
class ExcursionReport:
    segment: object
    gauge: SublinearGauge
    best_constant: Fraction
    sequence: Tuple[Tuple[int, int], ...]
    per_step: Tuple[ExcursionStep, ...]

    def as_dict(self) -> ReprDict:
        return ReprDict(
            segment=self.segment.as_dict(),
            gauge=str(self.gauge),
            best_constant=self.best_constant,
            sequence=[list(s) for s in self.sequence],
            per_step=[s.as_dict() for s in self.per_step],
            rootname="excursion",
        )


class _Constraints:
    """Per-crossing costs: the least c that admits each local condition."""

    def __init__(self, complex, path, gauge):
        self.crossings = path.crossings
        self.length = path.length
        kappa = [gauge(t) for t in range(self.length + 1)]
        m = len(self.crossings)
        self.start = [Fraction(t) / kappa[t] for _, t in self.crossings]
        self.end = [Fraction(self.length - t) / kappa[self.length] for _, t in self.crossings]
        self.empty = Fraction(self.length) / kappa[self.length]
        index = wall_index(complex)
        self.pair = [[None] * m for _ in range(m)]
        for j, (b, tb) in enumerate(self.crossings):
            for i, (a, ta) in enumerate(self.crossings[:j]):
                if index.crosses(a, b):
                    continue
                worst = max(tb - ta, wsep_degree(complex, a, b).degree)
                self.pair[i][j] = Fraction(worst) / kappa[tb]

    def candidates(self) -> List[Fraction]:
        values = {self.empty, *self.start, *self.end}
        values.update(c for row in self.pair for c in row if c is not None)
        return sorted(values)

    def reachable(self, c: Fraction):
        """Sequence ending at each crossing, as a parent list, or None."""
        m = len(self.crossings)
        parent: List[Optional[int]] = [None] * m
        reach = [False] * m
        for j in range(m):
            if self.start[j] <= c:
                reach[j] = True
                continue
            for i in range(j):
                cost = self.pair[i][j]
                if reach[i] and cost is not None and cost <= c:
                    reach[j], parent[j] = True, i
                    break
        for j in range(m):
            if reach[j] and self.end[j] <= c:
                sequence = []
                while j is not None:
                    sequence.append(j)
                    j = parent[j]
                return sequence[::-1]
        if self.empty <= c:
            return []
        return None


def excursion_scan(complex, path, gauge: SublinearGauge) -> ExcursionReport:
    """Least constant for which ``path`` is a kappa-excursion segment.

    Binary search over the finite set of critical ratios, each candidate
    tested with a reachability pass over the crossings.

    Parameters
    ----------
    complex : CubeComplex
        The ambient complex
    path : GeodesicPath
        A segment of length at least 1
    gauge : SublinearGauge
        The gauge kappa

    Returns
    ----------
    ExcursionReport
        the best constant, the witness sequence and its per-step bounds
    """
    if path.length < 1:
        raise InputError("The excursion scan needs a segment of length at least 1")
    constraints = _Constraints(complex, path, gauge)
    candidates = constraints.candidates()
    feasible = lambda i: constraints.reachable(candidates[i]) is not None
    best = bisect.bisect_left(range(len(candidates)), True, key=feasible)
    c = candidates[best]
    chosen = constraints.reachable(c)
    get_logger().debug(
        "excursion scan: {} candidates, best constant {}".format(len(candidates), c)
    )

    kappa = gauge
    steps = []
    previous = None
    for j in chosen:
        wall, t = path.crossings[j]
        if previous is None:
            steps.append(ExcursionStep(wall, t, t, None, c * kappa(t)))
        else:
            steps.append(
                ExcursionStep(wall, t, t - previous[1], wsep_degree(complex, previous[0], wall).degree, c * kappa(t))
            )
        previous = (wall, t)
    sequence = tuple(path.crossings[j] for j in chosen)
    return ExcursionReport(path, gauge, c, sequence, tuple(steps))


def validate_excursion(complex, report: ExcursionReport) -> bool:
    """Re-check a report's witness against its own constant."""
    path, c, kappa = report.segment, report.best_constant, report.gauge
    crossed = dict(path.crossings)
    walls = [h for h, _ in report.sequence]
    if len(set(walls)) != len(walls):
        return False
    if any(crossed.get(h) != t for h, t in report.sequence):
        return False
    times = [t for _, t in report.sequence]
    if times != sorted(times):
        return False
    if not report.sequence:
        return path.length <= c * kappa(path.length)
    if times[0] > c * kappa(times[0]) or path.length - times[-1] > c * kappa(path.length):
        return False
    index = wall_index(complex)
    for (a, ta), (b, tb) in zip(report.sequence, report.sequence[1:]):
        if index.crosses(a, b):
            return False
        bound = c * kappa(tb)
        if tb - ta > bound or wsep_degree(complex, a, b).degree > bound:
            return False
    return True
