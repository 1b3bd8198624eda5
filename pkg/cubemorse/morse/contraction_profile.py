# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple

import numpy as np

from ..runtime import PreconditionError, ReprDict
from .gauge import SublinearGauge


@dataclass(frozen=True)
class ContractionSample:
    vertex: int
    distance: int
    nearest: Tuple[int, ...]
    diameter: int
    ratio: Fraction

    def as_dict(self) -> ReprDict:
        return ReprDict(
            vertex=self.vertex,
            distance=self.distance,
            nearest=list(self.nearest),
            diameter=self.diameter,
            ratio=self.ratio,
            rootname="sample",
        )


def contraction_profile(
    complex, path, gauge: SublinearGauge, samples: Iterable[int]
) -> List[ContractionSample]:
    """Nearest-point sets of sample vertices on a path, in the l1 metric.

    For each sample ``x`` the path vertices closest to ``x`` are collected
    together with their diameter and the ratio of that diameter to
    ``kappa(d(path start, x))``. A diagnostic; no bound is asserted.
    """
    on_path = list(path.vertices)
    table = complex.dist_table
    profile = []
    for x in samples:
        x = complex.check_vertex(x)
        if x in on_path:
            raise PreconditionError("Sample {} lies on the path".format(x))
        row = table[x, on_path]
        nearest = tuple(sorted({on_path[i] for i in np.flatnonzero(row == row.min())}))
        diameter = int(table[np.ix_(nearest, nearest)].max())
        ratio = Fraction(diameter) / gauge(int(table[path.start, x]))
        profile.append(ContractionSample(x, int(row.min()), nearest, diameter, ratio))
    return profile
