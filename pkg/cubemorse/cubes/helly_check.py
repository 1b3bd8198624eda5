# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

from ..runtime import PreconditionError, ReprDict


@dataclass(frozen=True)
class HellyReport:
    passed: bool
    pairwise_intersecting: bool
    intersection: FrozenSet[int]
    witness: Optional[Tuple[int, ...]] = None

    def as_dict(self) -> ReprDict:
        return ReprDict(
            passed=self.passed,
            pairwise_intersecting=self.pairwise_intersecting,
            intersection=sorted(self.intersection),
            witness=list(self.witness) if self.witness else None,
            rootname="helly",
        )


def helly_check(complex, subsets: Sequence[Iterable[int]]) -> HellyReport:
    """Check the Helly property on a family of convex vertex sets.

    Pairwise intersecting convex sets of a median graph have a common
    vertex. A family with a disjoint pair passes vacuously.
    """
    family = [frozenset(s) for s in subsets]
    for i, s in enumerate(family):
        if not complex.is_convex(s):
            raise PreconditionError("Set #{} of the family is not convex".format(i))
    if not family:
        return HellyReport(True, True, frozenset(range(complex.vertex_count)))
    for a, b in itertools.combinations(family, 2):
        if not a & b:
            return HellyReport(True, False, frozenset())
    common = reduce(frozenset.intersection, family)
    if common:
        return HellyReport(True, True, common)
    return HellyReport(False, True, common, tuple(range(len(family))))
