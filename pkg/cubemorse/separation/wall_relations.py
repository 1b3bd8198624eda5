# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

"""
    Pairwise and triple relations between hyperplanes: crossing, nesting,
    facing triples and the crosser sets that feed both separation degrees.
    Results are memoised per complex in a ``WallIndex``.
"""

import itertools
import weakref
from functools import lru_cache
from typing import FrozenSet, Tuple

from ..runtime import InputError


class WallIndex:
    """Memoised wall relations of one complex.

    Obtain instances through ``wall_index(complex)`` so that every caller
    shares the same caches.
    """

    def __init__(self, complex):
        self.complex = weakref.proxy(complex)
        self.wall_count = len(complex.walls)
        self.crosses = lru_cache(maxsize=None)(self._crosses)
        self.side_of = lru_cache(maxsize=None)(self._side_of)
        self.crossers = lru_cache(maxsize=None)(self._crossers)
        self.wsep_cache = {}

    def _crosses(self, a: int, b: int) -> bool:
        return a != b and self.complex.walls_cross(a, b)

    def _side_of(self, h: int, g: int) -> int:
        """Side of wall ``h`` on which the disjoint wall ``g`` lies."""
        u, _ = next(iter(self.complex.walls[g].edge_class))
        return self.complex.walls[h].sign_of(u)

    def _crossers(self, a: int, b: int) -> FrozenSet[int]:
        if a > b:
            return self.crossers(b, a)
        return frozenset(
            h
            for h in range(self.wall_count)
            if h != a and h != b and self.crosses(a, h) and self.crosses(b, h)
        )

    def separates(self, h: int, a: int, b: int) -> bool:
        """True iff wall ``h`` has ``a`` and ``b`` in opposite halfspaces."""
        if h in (a, b) or self.crosses(h, a) or self.crosses(h, b):
            return False
        return self.side_of(h, a) != self.side_of(h, b)

    def is_facing(self, a: int, b: int, c: int) -> bool:
        if self.crosses(a, b) or self.crosses(a, c) or self.crosses(b, c):
            return False
        return not (
            self.separates(a, b, c) or self.separates(b, a, c) or self.separates(c, a, b)
        )


_indices = weakref.WeakKeyDictionary()


def wall_index(complex) -> WallIndex:
    index = _indices.get(complex)
    if index is None:
        index = _indices[complex] = WallIndex(complex)
    return index


def _distinct(complex, *walls) -> Tuple[int, ...]:
    walls = tuple(complex.check_wall(h) for h in walls)
    if len(set(walls)) != len(walls):
        raise InputError("Expected distinct walls, got {}".format(walls))
    return walls


def crosses(complex, h1: int, h2: int) -> bool:
    """True iff the four quadrants of ``h1`` and ``h2`` are all nonempty."""
    h1, h2 = _distinct(complex, h1, h2)
    return wall_index(complex).crosses(h1, h2)


def separates(complex, h: int, h1: int, h3: int) -> bool:
    """True iff ``h`` separates ``h1`` from ``h3``: one halfspace of ``h``
    contains a halfspace of ``h1`` and the other contains one of ``h3``."""
    h, h1, h3 = _distinct(complex, h, h1, h3)
    return wall_index(complex).separates(h, h1, h3)


def is_facing_triple(complex, h1: int, h2: int, h3: int) -> bool:
    """Three pairwise disjoint walls none of which separates the other two."""
    h1, h2, h3 = _distinct(complex, h1, h2, h3)
    return wall_index(complex).is_facing(h1, h2, h3)


def crossers(complex, h1: int, h2: int) -> FrozenSet[int]:
    h1, h2 = _distinct(complex, h1, h2)
    return wall_index(complex).crossers(h1, h2)


def sep_degree(complex, h1: int, h2: int) -> int:
    """Number of walls crossing both ``h1`` and ``h2``."""
    return len(crossers(complex, h1, h2))


def is_k_separated(complex, h1: int, h2: int, k: int) -> bool:
    """Disjoint walls with at most ``k`` walls crossing both."""
    return not crosses(complex, h1, h2) and sep_degree(complex, h1, h2) <= k


def facing_triples(complex, walls) -> Tuple[Tuple[int, int, int], ...]:
    index = wall_index(complex)
    return tuple(
        t for t in itertools.combinations(sorted(walls), 3) if index.is_facing(*t)
    )
