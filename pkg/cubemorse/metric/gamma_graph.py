# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

"""
    The well-separation graph: the complex's vertices joined whenever their
    d_k distance is at most 10k+4. Its path metric is bilipschitz to d_k
    with constants 1 and 10k+4, which ``bilipschitz_check`` verifies
    exactly.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..runtime import ReprDict, get_logger
from .well_separation import check_level, dk_matrix


def gamma_threshold(k: int) -> int:
    return 10 * k + 4


@dataclass
class GammaGraph:
    k: int
    threshold: int
    graph: nx.Graph
    dist_table: np.ndarray
    dk_table: np.ndarray = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def edges(self) -> List[Tuple[int, int]]:
        return sorted((min(u, v), max(u, v)) for u, v in self.graph.edges)

    @property
    def diameter(self) -> int:
        return int(self.dist_table.max(initial=0))


def build_gamma(complex, k: int, dk_table=None) -> GammaGraph:
    """Build the thresholded graph and its BFS distance table."""
    k = check_level(k)
    if dk_table is None:
        dk_table = dk_matrix(complex, k)
    threshold = gamma_threshold(k)
    n = complex.vertex_count
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(
        (u, v) for u, v in itertools.combinations(range(n), 2) if dk_table[u, v] <= threshold
    )
    dist_table = np.zeros((n, n), dtype=np.int64)
    for source, lengths in nx.all_pairs_shortest_path_length(graph):
        for target, d in lengths.items():
            dist_table[source, target] = d
    dist_table.setflags(write=False)
    get_logger().debug(
        "Gamma_{}: {} edges at threshold {}".format(k, graph.number_of_edges(), threshold)
    )
    return GammaGraph(k, threshold, graph, dist_table, dk_table)


@dataclass(frozen=True)
class BilipschitzReport:
    k: int
    passed: bool
    pairs_checked: int
    tight_pairs: int
    witness: Optional[Tuple[int, int, int, int]] = None

    def as_dict(self) -> ReprDict:
        return ReprDict(
            k=self.k,
            passed=self.passed,
            pairs_checked=self.pairs_checked,
            tight_pairs=self.tight_pairs,
            witness=list(self.witness) if self.witness else None,
            rootname="bilipschitz",
        )


def bilipschitz_check(complex, k: int, gamma: GammaGraph = None) -> BilipschitzReport:
    """Check d_Gamma <= d_k <= (10k+4) d_Gamma on every vertex pair.

    ``tight_pairs`` counts pairs where the lower bound holds with
    equality. The witness is ``(u, v, d_k, d_Gamma)`` of the first
    violating pair.
    """
    k = check_level(k)
    if gamma is None:
        gamma = build_gamma(complex, k)
    d, g = gamma.dk_table, gamma.dist_table
    upper, lower = d <= gamma.threshold * g, g <= d
    ok = upper & lower
    n = complex.vertex_count
    pairs = n * (n - 1) // 2
    tight = int(np.count_nonzero(np.triu(d == gamma.threshold * g, 1) & (g > 0)))
    if ok.all():
        return BilipschitzReport(k, True, pairs, tight)
    u, v = (int(i) for i in np.argwhere(~ok)[0])
    return BilipschitzReport(k, False, pairs, tight, (u, v, int(d[u, v]), int(g[u, v])))


@dataclass(frozen=True)
class PathProjectionReport:
    """Image of a vertex path in the well-separation graph.

    ``progress[i]`` is the graph distance from the first vertex to the
    i-th, ``arclength[i]`` the graph length of the prefix, and
    ``constants`` lists ``(lambda, A)`` with ``A`` the least additive
    constant making the image a ``(lambda, A)`` quasi-geodesic in the
    arclength parameter.
    """

    k: int
    vertices: Tuple[int, ...]
    progress: Tuple[int, ...]
    arclength: Tuple[int, ...]
    additivity_defect: int
    constants: Tuple[Tuple[int, Fraction], ...]

    @property
    def best_constants(self) -> Tuple[int, Fraction]:
        return min(self.constants, key=lambda c: (c[0] + c[1], c[0]))

    def as_dict(self) -> ReprDict:
        lam, additive = self.best_constants
        return ReprDict(
            k=self.k,
            vertices=list(self.vertices),
            progress=list(self.progress),
            arclength=list(self.arclength),
            additivity_defect=self.additivity_defect,
            best_multiplicative=lam,
            best_additive=additive,
            rootname="projection",
        )


def project_path(complex, path, k: int, gamma: GammaGraph = None) -> PathProjectionReport:
    """Project a vertex path (or ``GeodesicPath``) into Gamma_k.

    The vertex map is the identity; the report measures how far the image
    is from a geodesic. It is a diagnostic, no bound is asserted here.
    """
    k = check_level(k)
    vertices: Sequence[int] = getattr(path, "vertices", path)
    vertices = tuple(complex.check_vertex(v) for v in vertices)
    if gamma is None:
        gamma = build_gamma(complex, k)
    g = gamma.dist_table[np.ix_(vertices, vertices)]
    m = len(vertices)

    arclength = [0]
    for i in range(1, m):
        arclength.append(arclength[-1] + int(g[i - 1, i]))
    defect = 0
    for i, j, l in itertools.combinations(range(m), 3):
        defect = max(defect, int(g[i, j] + g[j, l] - g[i, l]))

    constants = []
    for lam in range(1, gamma.threshold + 1):
        additive = Fraction(0)
        for i, j in itertools.combinations(range(m), 2):
            additive = max(additive, Fraction(arclength[j] - arclength[i], lam) - int(g[i, j]))
        constants.append((lam, additive))
    return PathProjectionReport(
        k, vertices, tuple(int(x) for x in g[0]) if m else (), tuple(arclength) if m else (), defect, tuple(constants)
    )


def export_dot(graph) -> str:
    """Undirected DOT text for a ``GammaGraph`` or a complex's 1-skeleton."""
    if isinstance(graph, GammaGraph):
        n, edges = graph.vertex_count, graph.edges
    else:
        n, edges = graph.vertex_count, sorted(graph.edges)
    lines = ["graph {"]
    lines.extend("  {};".format(v) for v in range(n))
    lines.extend("  {} -- {};".format(u, v) for u, v in edges)
    return "\n".join(lines) + "\n}\n"
