# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

from typing import Iterable, Tuple

import networkx as nx


def longest_chain(complex, walls: Iterable[int]) -> Tuple[int, ...]:
    """Longest nested chain inside ``walls``, outermost wall first.

    Nodes of the search DAG are oriented halfspaces; an arc runs from a
    halfspace to every halfspace of another wall strictly inside it. A
    directed path is then a family of pairwise disjoint, nested walls.
    """
    walls = sorted({complex.check_wall(h) for h in walls})
    if len(walls) < 2:
        return tuple(walls)
    plus, minus = complex._plus_masks, complex._minus_masks
    halfspaces = [((h, 1), plus[h]) for h in walls] + [((h, -1), minus[h]) for h in walls]

    dag = nx.DiGraph()
    dag.add_nodes_from(node for node, _ in halfspaces)
    for outer, outer_mask in halfspaces:
        for inner, inner_mask in halfspaces:
            if outer[0] != inner[0] and inner_mask & ~outer_mask == 0:
                dag.add_edge(outer, inner)
    return tuple(h for h, _ in nx.dag_longest_path(dag))
