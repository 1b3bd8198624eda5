# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

from typing import FrozenSet, Iterable


def gromov_product(complex, o: int, x: int, y: int) -> int:
    """Number of walls separating ``o`` from both ``x`` and ``y``."""
    return len(complex.separating_set_from(o, (x, y)))


def hyp_basis_member(complex, o: int, targets: Iterable[int], x: int) -> bool:
    """True iff every wall in ``targets`` separates ``o`` from ``x``.

    Every combinatorial geodesic from ``o`` to ``x`` then crosses all of
    them.
    """
    separating = complex.separating_set(o, x)
    return all(complex.check_wall(h) in separating for h in targets)


def hyp_neighborhood(complex, o: int, targets: Iterable[int]) -> FrozenSet[int]:
    """Vertices ``x`` with ``hyp_basis_member(o, targets, x)``."""
    o = complex.check_vertex(o)
    targets = [complex.check_wall(h) for h in targets]
    if not targets:
        return frozenset(range(complex.vertex_count))
    sides = complex.side_matrix[targets]
    far = sides != sides[:, [o]]
    return frozenset(int(v) for v in far.all(axis=0).nonzero()[0])
