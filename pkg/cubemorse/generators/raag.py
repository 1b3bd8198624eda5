# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

"""
    Convex pieces of the universal cover of a Salvetti complex.

    Elements of a right-angled Artin group are stored as pilings: one stack
    per generator holding +1/-1 for a letter of that generator and 0 for a
    tile left by a non-commuting letter. Two words give the same piling iff
    they are equal in the group, so pilings are used as dictionary keys.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from ..cubes import CubeComplex
from ..runtime import CubeMorseError, InputError, get_logger

Letter = Tuple[int, int]
Piling = Tuple[Tuple[int, ...], ...]
Word = Tuple[Letter, ...]


class EnlargementError(CubeMorseError):
    """This exception is raised when the hull of a ball reaches the shell of
    the ambient radius it is allowed to use. Re-run with a larger
    ``ambient_radius``."""

    pass


@dataclass(frozen=True)
class RaagPresentation:
    """Generators and the pairs of them that commute."""

    names: Tuple[str, ...]
    commutations: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        if not self.names:
            raise InputError("A presentation needs at least one generator")
        if len(set(self.names)) != len(self.names):
            raise InputError("Duplicate generator names in {}".format(self.names))
        for a, b in self.commutations:
            if a == b or not (0 <= a < len(self.names) and 0 <= b < len(self.names)):
                raise InputError("Bad commutation pair {}".format((a, b)))

    @classmethod
    def parse(cls, graph: str = "", extra: str = "") -> "RaagPresentation":
        """Build from ``"a-b,b-c"`` commutation edges plus isolated generators ``"d,e"``."""
        names: List[str] = []
        pairs = set()

        def index(name):
            name = name.strip()
            if not name.isidentifier():
                raise InputError("Bad generator name {!r}".format(name))
            if name not in names:
                names.append(name)
            return names.index(name)

        for edge in filter(None, (e.strip() for e in graph.split(","))):
            ends = edge.split("-")
            if len(ends) != 2:
                raise InputError("Bad commutation edge {!r}".format(edge))
            a, b = index(ends[0]), index(ends[1])
            if a == b:
                raise InputError("A generator cannot commute with itself in {!r}".format(edge))
            pairs.add((min(a, b), max(a, b)))
        for name in filter(None, (n.strip() for n in extra.split(","))):
            index(name)
        return cls(tuple(names), frozenset(pairs))

    @property
    def generator_count(self) -> int:
        return len(self.names)

    def commute(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.commutations

    @property
    def dimension(self) -> int:
        """Clique number of the commutation graph."""
        g = nx.Graph()
        g.add_nodes_from(range(self.generator_count))
        g.add_edges_from(self.commutations)
        return nx.max_weight_clique(g, weight=None)[1]

    def letters(self) -> List[Letter]:
        return [(a, e) for a in range(self.generator_count) for e in (1, -1)]


class RaagGroup:
    """Piling arithmetic for one presentation."""

    def __init__(self, presentation: RaagPresentation):
        self.presentation = presentation
        n = presentation.generator_count
        self.blockers = tuple(
            tuple(b for b in range(n) if b != a and not presentation.commute(a, b)) for a in range(n)
        )
        self.identity: Piling = tuple(() for _ in range(n))
        self.normal_form = lru_cache(maxsize=None)(self._normal_form)
        self.prefixes = lru_cache(maxsize=None)(self._prefixes)

    def push(self, piling: Piling, letter: Letter) -> Piling:
        """Right multiplication by a letter."""
        a, e = letter
        stacks = [list(s) for s in piling]
        if stacks[a] and stacks[a][-1] == -e:
            stacks[a].pop()
            for b in self.blockers[a]:
                stacks[b].pop()
        else:
            stacks[a].append(e)
            for b in self.blockers[a]:
                stacks[b].append(0)
        return tuple(tuple(s) for s in stacks)

    def evaluate(self, word: Sequence[Letter], start: Optional[Piling] = None) -> Piling:
        piling = self.identity if start is None else start
        for letter in word:
            piling = self.push(piling, letter)
        return piling

    @staticmethod
    def length(piling: Piling) -> int:
        return sum(1 for s in piling for x in s if x)

    def first_letters(self, piling: Piling) -> List[Letter]:
        """Letters that can start a geodesic word for ``piling``."""
        return [(a, s[0]) for a, s in enumerate(piling) if s and s[0]]

    def strip(self, piling: Piling, letter: Letter) -> Piling:
        """Left division by a first letter."""
        a, _ = letter
        stacks = [list(s) for s in piling]
        del stacks[a][0]
        for b in self.blockers[a]:
            del stacks[b][0]
        return tuple(tuple(s) for s in stacks)

    def prepend(self, piling: Piling, letter: Letter) -> Piling:
        """Left multiplication, valid when the product is longer."""
        a, e = letter
        stacks = [list(s) for s in piling]
        stacks[a].insert(0, e)
        for b in self.blockers[a]:
            stacks[b].insert(0, 0)
        return tuple(tuple(s) for s in stacks)

    def _normal_form(self, piling: Piling) -> Word:
        """Shortlex least geodesic word, letters ordered a, a^-1, b, b^-1, ..."""
        word = []
        while any(piling):
            letter = min(self.first_letters(piling), key=lambda l: (l[0], -l[1]))
            word.append(letter)
            piling = self.strip(piling, letter)
        return tuple(word)

    def inverse(self, piling: Piling) -> Piling:
        return self.evaluate([(a, -e) for a, e in reversed(self.normal_form(piling))])

    def multiply(self, x: Piling, y: Piling) -> Piling:
        return self.evaluate(self.normal_form(y), start=x)

    def _prefixes(self, piling: Piling) -> FrozenSet[Piling]:
        """Every ``p`` with ``|p| + |p^-1 x| = |x|``."""
        found = {self.identity}
        for letter in self.first_letters(piling):
            found.update(self.prepend(p, letter) for p in self.prefixes(self.strip(piling, letter)))
        return frozenset(found)

    def interval(self, u: Piling, v: Piling) -> FrozenSet[Piling]:
        return frozenset(self.multiply(u, p) for p in self.prefixes(self.multiply(self.inverse(u), v)))


def _ordered(group: RaagGroup, pilings) -> List[Piling]:
    return sorted(pilings, key=lambda p: (group.length(p), [(a, -e) for a, e in group.normal_form(p)]))


def _ball(group: RaagGroup, radius: int) -> List[Piling]:
    if radius < 0:
        raise InputError("The radius must be nonnegative, got {}".format(radius))
    seen = {group.identity}
    layer = [group.identity]
    for _ in range(radius):
        nxt = []
        for piling in layer:
            for letter in group.presentation.letters():
                child = group.push(piling, letter)
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
        layer = nxt
    return _ordered(group, seen)


def raag_ball(presentation: RaagPresentation, radius: int) -> List[Word]:
    """Normal forms of the radius ball, shortlex ordered."""
    group = RaagGroup(presentation)
    return [group.normal_form(p) for p in _ball(group, radius)]


def ball_sizes(presentation: RaagPresentation, max_radius: int) -> List[int]:
    """Cumulative ball sizes for radii ``0..max_radius``."""
    group = RaagGroup(presentation)
    counts = [0] * (max_radius + 1)
    for p in _ball(group, max_radius):
        counts[group.length(p)] += 1
    return list(itertools.accumulate(counts))


def raag_hull_words(
    presentation: RaagPresentation, radius: int, ambient_radius: Optional[int] = None
) -> List[Word]:
    """Normal forms of the convex hull of the radius ball, shortlex ordered.

    Intervals are computed in the group itself, as ``u`` times the prefixes
    of ``u^-1 v``. Elements are not allowed to reach ``ambient_radius``,
    by default ``dimension * radius + 1``.
    """
    if radius < 1:
        raise InputError("The hull radius must be positive, got {}".format(radius))
    group = RaagGroup(presentation)
    limit = ambient_radius if ambient_radius is not None else presentation.dimension * radius + 1
    hull = set(_ball(group, radius))
    frontier = set(hull)
    rounds = 0
    while frontier:
        added = set()
        for u in frontier:
            for v in hull:
                added |= group.interval(u, v)
        frontier = added - hull
        hull |= frontier
        rounds += 1
        too_long = [p for p in frontier if group.length(p) >= limit]
        if too_long:
            raise EnlargementError(
                "Hull of the radius {} ball reaches length {} (ambient radius {})".format(
                    radius, max(group.length(p) for p in too_long), limit
                )
            )
    get_logger().debug("raag hull: {} elements after {} closure rounds".format(len(hull), rounds))
    return [group.normal_form(p) for p in _ordered(group, hull)]


def raag_hull(
    presentation: RaagPresentation, radius: int, ambient_radius: Optional[int] = None
) -> CubeComplex:
    """Convex hull of the radius ball in the Cayley graph, as a complex.

    Vertex ids follow ``raag_hull_words``; the identity is vertex 0.
    """
    group = RaagGroup(presentation)
    words = raag_hull_words(presentation, radius, ambient_radius)
    ids: Dict[Piling, int] = {group.evaluate(w): i for i, w in enumerate(words)}
    edges = set()
    for piling, i in ids.items():
        for letter in presentation.letters():
            j = ids.get(group.push(piling, letter))
            if j is not None:
                edges.add((min(i, j), max(i, j)))
    return CubeComplex(len(words), sorted(edges))
