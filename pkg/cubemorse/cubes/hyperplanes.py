# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

"""
    Hyperplanes (walls) of a median graph, derived combinatorially as the
    classes of the transitive closure of the "opposite edges of a square"
    relation.
"""

import itertools
from dataclasses import dataclass
from typing import FrozenSet, List, Tuple

import networkx as nx

from ..runtime import CubeMorseError, get_logger

Edge = Tuple[int, int]


class StructuralError(CubeMorseError):
    """This exception is raised when an edge class does not split the graph
    into exactly two halfspaces, which means the input was not a median
    graph."""

    pass


@dataclass(frozen=True)
class Hyperplane:
    """A wall: an equivalence class of parallel edges and its two halfspaces.

    ``side_minus`` is the halfspace that contains vertex 0, so vertex 0 is
    oriented negatively on every wall.
    """

    id: int
    edge_class: FrozenSet[Edge]
    side_minus: FrozenSet[int]
    side_plus: FrozenSet[int]

    def side(self, sign: int) -> FrozenSet[int]:
        return self.side_plus if sign > 0 else self.side_minus

    def sign_of(self, vertex: int) -> int:
        return 1 if vertex in self.side_plus else -1

    def __len__(self):
        return len(self.edge_class)


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def derive_walls(complex) -> List[Hyperplane]:
    """Derive the hyperplanes of a validated median graph.

    Opposite edges of every square are merged with a union-find; each
    resulting class must disconnect the graph into exactly two components,
    which become its halfspaces. Walls are numbered by their smallest edge.

    Parameters
    ----------
    complex : CubeComplex
        The complex whose 1-skeleton is inspected

    Returns
    ----------
    list
        the walls, ``walls[i].id == i``
    """
    logger = get_logger()
    adjacency = complex.adjacency
    classes = nx.utils.UnionFind(complex.edges)
    squares = 0
    for u in range(complex.vertex_count):
        for a, b in itertools.combinations(adjacency[u], 2):
            common = set(adjacency[a]).intersection(adjacency[b])
            common.discard(u)
            for w in common:
                classes.union(_edge(u, a), _edge(b, w))
                classes.union(_edge(u, b), _edge(a, w))
                squares += 1
    ordered = sorted((sorted(c) for c in classes.to_sets()), key=lambda c: c[0])

    walls = []
    for wall_id, edge_class in enumerate(ordered):
        cut = complex.graph.copy()
        cut.remove_edges_from(edge_class)
        components = list(nx.connected_components(cut))
        if len(components) != 2:
            raise StructuralError(
                "Edge class {} leaves {} components instead of 2".format(
                    edge_class, len(components)
                )
            )
        minus, plus = components if 0 in components[0] else components[::-1]
        for u, v in edge_class:
            if (u in minus) == (v in minus):
                raise StructuralError(
                    "Edge ({}, {}) does not cross the wall of its own class".format(u, v)
                )
        walls.append(
            Hyperplane(wall_id, frozenset(edge_class), frozenset(minus), frozenset(plus))
        )
    logger.debug("derived {} walls from {} square incidences".format(len(walls), squares))
    return walls
