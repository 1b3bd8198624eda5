# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

"""
    A finite CAT(0) cube complex stored as its 1-skeleton, a median graph.
    Cubes are never enumerated: every quantity is computed from the walls.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx
import numpy as np

from ..runtime import InputError, PreconditionError, ReprDict
from .hyperplanes import Edge, Hyperplane, derive_walls
from .validate_median import NotMedianError, validate_median


@dataclass(frozen=True)
class GeodesicPath:
    """A combinatorial geodesic.

    ``crossings`` lists ``(wall id, t)`` where ``t`` is the index of the
    vertex reached right after crossing the wall, so ``1 <= t <= length``.
    """

    vertices: Tuple[int, ...]
    crossings: Tuple[Tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    @property
    def walls(self) -> Tuple[int, ...]:
        return tuple(h for h, _ in self.crossings)

    def crossing_time(self, wall: int) -> int:
        for h, t in self.crossings:
            if h == wall:
                return t
        raise InputError("wall {} is not crossed by this path".format(wall))

    def subpath(self, i: int, j: int) -> "GeodesicPath":
        """Return the segment between vertex indices ``i <= j``."""
        return GeodesicPath(
            self.vertices[i : j + 1],
            tuple((h, t - i) for h, t in self.crossings if i < t <= j),
        )

    def as_dict(self) -> ReprDict:
        return ReprDict(
            vertices=list(self.vertices),
            crossings=[list(c) for c in self.crossings],
            rootname="geodesic",
        )


@dataclass(frozen=True)
class VertexOrientation:
    """A choice of halfspace (+1 or -1) for every wall, i.e. an ultrafilter."""

    signs: Tuple[int, ...]

    def flip(self, wall: int) -> "VertexOrientation":
        signs = list(self.signs)
        signs[wall] = -signs[wall]
        return VertexOrientation(tuple(signs))


class CubeComplex:
    """A finite CAT(0) cube complex given by its 1-skeleton.

    The constructor rejects malformed graphs and, unless ``validate`` is
    ``False``, refuses graphs that are not median. The object is immutable
    after construction; derived tables are computed lazily and cached.

    Parameters
    ----------
    vertex_count : int
        Number of vertices, ids are ``0 .. vertex_count - 1``
    edges : iterable of pairs
        Unordered vertex pairs
    validate : bool
        Run the median-graph gate (default True)

    """

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]], validate=True):
        if vertex_count < 1:
            raise InputError("A complex needs at least one vertex")
        seen = set()
        for e in edges:
            if len(e) != 2:
                raise InputError("Edge {} is not a vertex pair".format(e))
            u, v = int(e[0]), int(e[1])
            for w in (u, v):
                if not 0 <= w < vertex_count:
                    raise InputError("Vertex id {} out of range 0..{}".format(w, vertex_count - 1))
            if u == v:
                raise InputError("Self-loop at vertex {}".format(u))
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputError("Duplicate edge {}".format(key))
            seen.add(key)

        self.vertex_count = vertex_count
        self.edges: Tuple[Edge, ...] = tuple(sorted(seen))
        self.graph = nx.Graph()
        self.graph.add_nodes_from(range(vertex_count))
        self.graph.add_edges_from(self.edges)
        if not nx.is_connected(self.graph):
            raise InputError("The graph is not connected")
        self.adjacency: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(sorted(self.graph.adj[v])) for v in range(vertex_count)
        )
        if validate:
            report = validate_median(self)
            if not report.passed:
                raise NotMedianError(report)

    @classmethod
    def from_graph(cls, graph: nx.Graph, validate=True) -> "CubeComplex":
        """Build from a networkx graph whose nodes are ``0 .. n-1``."""
        if sorted(graph.nodes) != list(range(graph.number_of_nodes())):
            raise InputError("Graph nodes must be the integers 0..n-1")
        return cls(graph.number_of_nodes(), graph.edges, validate=validate)

    def __repr__(self):
        return "CubeComplex(vertices={}, edges={})".format(self.vertex_count, len(self.edges))

    def __eq__(self, other):
        if not isinstance(other, CubeComplex):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    # ----------------------------------------------
    # Derived tables
    # ----------------------------------------------

    @cached_property
    def dist_table(self) -> np.ndarray:
        """All-pairs BFS distances in edge units."""
        table = np.zeros((self.vertex_count, self.vertex_count), dtype=np.int64)
        for source, lengths in nx.all_pairs_shortest_path_length(self.graph):
            for target, d in lengths.items():
                table[source, target] = d
        table.setflags(write=False)
        return table

    @cached_property
    def walls(self) -> List[Hyperplane]:
        return derive_walls(self)

    @cached_property
    def side_matrix(self) -> np.ndarray:
        """Boolean matrix, ``side_matrix[h, v]`` is True iff v is on the plus side of h."""
        sides = np.zeros((len(self.walls), self.vertex_count), dtype=bool)
        for h in self.walls:
            sides[h.id, sorted(h.side_plus)] = True
        sides.setflags(write=False)
        return sides

    @cached_property
    def _plus_masks(self) -> Tuple[int, ...]:
        return tuple(sum(1 << v for v in h.side_plus) for h in self.walls)

    @cached_property
    def _minus_masks(self) -> Tuple[int, ...]:
        return tuple(sum(1 << v for v in h.side_minus) for h in self.walls)

    @cached_property
    def _codes(self) -> Tuple[int, ...]:
        """Per vertex, the bitmask of walls on whose plus side it lies."""
        codes = [0] * self.vertex_count
        for h in self.walls:
            for v in h.side_plus:
                codes[v] |= 1 << h.id
        return tuple(codes)

    @cached_property
    def _vertex_by_code(self) -> Dict[int, int]:
        return {code: v for v, code in enumerate(self._codes)}

    @cached_property
    def edge_walls(self) -> Dict[Edge, int]:
        return {e: h.id for h in self.walls for e in h.edge_class}

    @cached_property
    def crossing_graph(self) -> nx.Graph:
        """Graph on wall ids with an edge for every crossing pair."""
        g = nx.Graph()
        g.add_nodes_from(range(len(self.walls)))
        for a, b in itertools.combinations(range(len(self.walls)), 2):
            if self.walls_cross(a, b):
                g.add_edge(a, b)
        return g

    @cached_property
    def dimension(self) -> int:
        """Largest family of pairwise crossing walls; 0 when there are no walls."""
        if not self.walls:
            return 0
        _, size = nx.max_weight_clique(self.crossing_graph, weight=None)
        return size

    @cached_property
    def diameter(self) -> int:
        return int(self.dist_table.max())

    # ----------------------------------------------
    # Primitives
    # ----------------------------------------------

    def check_vertex(self, v) -> int:
        if isinstance(v, (bool, np.bool_)) or not isinstance(v, (int, np.integer)):
            raise InputError("Vertex id must be an integer, got {!r}".format(v))
        if not 0 <= v < self.vertex_count:
            raise InputError("Vertex id {} out of range 0..{}".format(v, self.vertex_count - 1))
        return int(v)

    def check_wall(self, h) -> int:
        if isinstance(h, (bool, np.bool_)) or not isinstance(h, (int, np.integer)) or not 0 <= h < len(self.walls):
            raise InputError("Unknown wall id {!r}".format(h))
        return int(h)

    def walls_cross(self, a: int, b: int) -> bool:
        """True iff all four quadrants of the two walls are nonempty."""
        pa, ma = self._plus_masks[a], self._minus_masks[a]
        pb, mb = self._plus_masks[b], self._minus_masks[b]
        return bool(pa & pb and pa & mb and ma & pb and ma & mb)

    def dist1(self, u: int, v: int) -> int:
        u, v = self.check_vertex(u), self.check_vertex(v)
        return int(self.dist_table[u, v])

    def separating_set(self, u: int, v: int) -> FrozenSet[int]:
        u, v = self.check_vertex(u), self.check_vertex(v)
        if not self.walls:
            return frozenset()
        sides = self.side_matrix
        return frozenset(int(h) for h in np.flatnonzero(sides[:, u] != sides[:, v]))

    def separating_set_from(self, x: int, subset: Iterable[int]) -> FrozenSet[int]:
        """Walls with ``x`` on one side and all of ``subset`` on the other."""
        x = self.check_vertex(x)
        members = [self.check_vertex(s) for s in subset]
        if not members or not self.walls:
            return frozenset()
        sides = self.side_matrix
        on_x_side = sides[:, members] == sides[:, [x]]
        return frozenset(int(h) for h in np.flatnonzero(~on_x_side.any(axis=1)))

    def median(self, x: int, y: int, z: int) -> int:
        x, y, z = self.check_vertex(x), self.check_vertex(y), self.check_vertex(z)
        a, b, c = self._codes[x], self._codes[y], self._codes[z]
        return self._vertex_by_code[(a & b) | (a & c) | (b & c)]

    def _interval_mask(self, u: int, v: int) -> np.ndarray:
        table = self.dist_table
        return table[u] + table[v] == table[u, v]

    def interval(self, u: int, v: int) -> FrozenSet[int]:
        u, v = self.check_vertex(u), self.check_vertex(v)
        return frozenset(int(w) for w in np.flatnonzero(self._interval_mask(u, v)))

    def geodesic(self, u: int, v: int) -> GeodesicPath:
        """Geodesic from u to v, stepping to the lowest-id neighbour that gets closer."""
        u, v = self.check_vertex(u), self.check_vertex(v)
        table = self.dist_table
        vertices = [u]
        crossings = []
        current = u
        while current != v:
            step = min(w for w in self.adjacency[current] if table[w, v] == table[current, v] - 1)
            crossings.append((self.edge_walls[(min(current, step), max(current, step))], len(vertices)))
            vertices.append(step)
            current = step
        return GeodesicPath(tuple(vertices), tuple(crossings))

    def path_from_vertices(self, vertices: Sequence[int]) -> GeodesicPath:
        """Wrap an explicit vertex sequence, checking it is a geodesic."""
        if not vertices:
            raise InputError("A path needs at least one vertex")
        vertices = [self.check_vertex(v) for v in vertices]
        crossings = []
        for t, (a, b) in enumerate(zip(vertices, vertices[1:]), start=1):
            key = (min(a, b), max(a, b))
            if key not in self.edge_walls:
                raise InputError("Vertices {} and {} are not adjacent".format(a, b))
            crossings.append((self.edge_walls[key], t))
        walls = [h for h, _ in crossings]
        if len(set(walls)) != len(walls):
            raise InputError("The path crosses a wall twice, it is not a geodesic")
        return GeodesicPath(tuple(vertices), tuple(crossings))

    def hull(self, subset: Iterable[int]) -> FrozenSet[int]:
        """Interval-closure fixpoint of ``subset``."""
        members = {self.check_vertex(v) for v in subset}
        if not members:
            raise InputError("The hull of an empty set is undefined")
        hull = set(members)
        frontier = set(members)
        while frontier:
            added = set()
            # pairs inside the previous hull were closed in an earlier round
            for u in frontier:
                for v in hull:
                    added.update(int(w) for w in np.flatnonzero(self._interval_mask(u, v)))
            frontier = added - hull
            hull |= frontier
        return frozenset(hull)

    def halfspace_hull(self, subset: Iterable[int]) -> FrozenSet[int]:
        """Intersection of all halfspaces containing ``subset``."""
        members = [self.check_vertex(v) for v in subset]
        if not members:
            raise InputError("The hull of an empty set is undefined")
        mask = (1 << self.vertex_count) - 1
        subset_mask = sum(1 << v for v in set(members))
        for plus, minus in zip(self._plus_masks, self._minus_masks):
            if subset_mask & plus == subset_mask:
                mask &= plus
            elif subset_mask & minus == subset_mask:
                mask &= minus
        return frozenset(v for v in range(self.vertex_count) if mask >> v & 1)

    def is_convex(self, subset: Iterable[int]) -> bool:
        members = frozenset(subset)
        return bool(members) and self.hull(members) == members

    def gate(self, x: int, subset: Iterable[int]) -> int:
        """Nearest vertex of the convex set ``subset`` to ``x``."""
        x = self.check_vertex(x)
        members = frozenset(self.check_vertex(s) for s in subset)
        if not self.is_convex(members):
            raise PreconditionError("gate requires a nonempty convex target set")
        row = self.dist_table[x]
        return min(members, key=lambda s: (row[s], s))

    def halfspace(self, wall: int, sign: int) -> FrozenSet[int]:
        return self.walls[self.check_wall(wall)].side(sign)

    # ----------------------------------------------
    # Orientations (finite Roller points)
    # ----------------------------------------------

    def orientation(self, x: int) -> VertexOrientation:
        x = self.check_vertex(x)
        code = self._codes[x]
        return VertexOrientation(tuple(1 if code >> h & 1 else -1 for h in range(len(self.walls))))

    def _chosen_masks(self, orientation: VertexOrientation) -> List[int]:
        if len(orientation.signs) != len(self.walls):
            raise InputError(
                "Orientation has {} signs for {} walls".format(len(orientation.signs), len(self.walls))
            )
        return [
            self._plus_masks[h] if s > 0 else self._minus_masks[h]
            for h, s in enumerate(orientation.signs)
        ]

    def is_consistent(self, orientation: VertexOrientation) -> bool:
        """Chosen halfspaces pairwise intersect."""
        masks = self._chosen_masks(orientation)
        return all(a & b for a, b in itertools.combinations(masks, 2))

    def realize(self, orientation: VertexOrientation) -> int:
        """The vertex lying in every chosen halfspace."""
        mask = (1 << self.vertex_count) - 1
        for chosen in self._chosen_masks(orientation):
            mask &= chosen
        if not mask:
            raise InputError("Inconsistent orientation: the chosen halfspaces do not meet")
        return mask.bit_length() - 1
