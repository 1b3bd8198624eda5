# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

import itertools
from dataclasses import dataclass
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

from ..runtime import InputError, ReprDict, get_logger
from .hyperplanes import StructuralError, derive_walls


@dataclass(frozen=True)
class MedianReport:
    passed: bool
    witness: Optional[Tuple[int, int, int]] = None
    reason: str = ""

    def as_dict(self) -> ReprDict:
        return ReprDict(
            passed=self.passed,
            witness=list(self.witness) if self.witness else None,
            reason=self.reason,
            rootname="median",
        )


class NotMedianError(InputError):
    """This exception is raised when a graph loaded as a cube complex fails
    the median-graph gate. The failing report is kept in ``report``."""

    def __init__(self, report: MedianReport):
        self.report = report
        super().__init__(
            "Not a median graph ({}); witness triple {}".format(report.reason, report.witness)
        )


def _first_bad_triple(complex) -> Optional[Tuple[int, int, int]]:
    """Brute force: first triple whose three intervals do not meet in exactly one vertex."""
    table = complex.dist_table
    for x, y, z in itertools.combinations(range(complex.vertex_count), 3):
        common = (
            (table[x] + table[y] == table[x, y])
            & (table[y] + table[z] == table[y, z])
            & (table[x] + table[z] == table[x, z])
        )
        if np.count_nonzero(common) != 1:
            return (x, y, z)
    return None


def _majority_outside(codes: List[int], wall_count: int) -> Optional[Tuple[int, int, int]]:
    """First triple, in combinations order, whose majority code is not a vertex code."""
    n = len(codes)
    if wall_count > 62:
        vertices = set(codes)
        for x, y, z in itertools.combinations(range(n), 3):
            a, b, c = codes[x], codes[y], codes[z]
            if (a & b) | (a & c) | (b & c) not in vertices:
                return (x, y, z)
        return None

    bits = np.array([[code >> h & 1 for h in range(wall_count)] for code in codes], dtype=bool)
    weights = np.left_shift(np.int64(1), np.arange(wall_count, dtype=np.int64))
    vertex_codes = np.array(codes, dtype=np.int64)
    for x in range(n - 2):
        rest = bits[x + 1 :]
        ys, zs = np.triu_indices(len(rest), 1)
        majority = (bits[x] & (rest[ys] | rest[zs])) | (rest[ys] & rest[zs])
        found = np.isin(majority.astype(np.int64) @ weights, vertex_codes)
        if not found.all():
            i = int(np.argmin(found))
            return (x, x + 1 + int(ys[i]), x + 1 + int(zs[i]))
    return None


def _fail(complex, reason: str) -> MedianReport:
    witness = _first_bad_triple(complex)
    if witness is None:
        return MedianReport(True)
    return MedianReport(False, witness, reason)


def validate_median(complex) -> MedianReport:
    """Decide whether the 1-skeleton of ``complex`` is a median graph.

    The fast path embeds the graph in a hypercube through its walls and
    then checks that the coordinatewise majority of every triple is a
    vertex, which in a partial cube is both existence and uniqueness of
    the median. Any failure falls back to the brute-force interval test so
    that the report always names a concrete failing triple.

    Parameters
    ----------
    complex : CubeComplex
        A connected simple graph, usually built with ``validate=False``

    Returns
    ----------
    MedianReport
        ``passed`` plus, on failure, the first failing triple
    """
    logger = get_logger()
    n = complex.vertex_count
    if n == 1:
        return MedianReport(True)
    if not nx.is_bipartite(complex.graph):
        return _fail(complex, "not bipartite")
    try:
        walls = derive_walls(complex)
    except StructuralError as e:
        logger.debug(str(e))
        return _fail(complex, "square classes do not cut the graph in two")

    hamming = np.zeros((n, n), dtype=np.int64)
    codes = [0] * n
    for h in walls:
        side = np.zeros(n, dtype=bool)
        side[sorted(h.side_plus)] = True
        hamming += side[:, None] != side[None, :]
        for v in h.side_plus:
            codes[v] |= 1 << h.id
    if not np.array_equal(hamming, complex.dist_table):
        return _fail(complex, "walls do not embed the graph isometrically")

    witness = _majority_outside(codes, len(walls))
    if witness is not None:
        return MedianReport(False, witness, "majority of a triple is not a vertex")
    logger.debug("median gate passed on {} vertices, {} walls".format(n, len(walls)))
    return MedianReport(True)
