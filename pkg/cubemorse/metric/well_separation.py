# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

"""
    The well-separation distance d_k: the largest family of pairwise
    k-well-separated walls separating two vertices. Such a family is always
    a nested chain, so it is found as a longest path over the separating
    walls in crossing order, keeping an arc when the pair is disjoint with
    well-separation degree at most k.
"""

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

import numpy as np
from tqdm import tqdm

from ..runtime import InputError, ReprDict, get_logger
from ..separation import wall_index, wsep_degree

DK_ORACLE_LIMIT = 15


@dataclass(frozen=True)
class WellSepCertificate:
    k: int
    endpoints: Tuple[int, int]
    chain: Tuple[int, ...]
    pair_degrees: Tuple[int, ...]

    def as_dict(self) -> ReprDict:
        return ReprDict(
            k=self.k,
            endpoints=list(self.endpoints),
            chain=list(self.chain),
            pair_degrees=list(self.pair_degrees),
            rootname="certificate",
        )


def check_level(k) -> int:
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 0:
        raise InputError("The level k must be a nonnegative integer, got {!r}".format(k))
    return int(k)


def _chain_allowed(complex, a: int, b: int, k: int) -> bool:
    if wall_index(complex).crosses(a, b):
        return False
    return wsep_degree(complex, a, b).degree <= k


def dk(complex, u: int, v: int, k: int) -> Tuple[int, WellSepCertificate]:
    """Exact d_k(u, v) with a certificate chain.

    Parameters
    ----------
    complex : CubeComplex
        The ambient complex
    u, v : int
        Vertex ids
    k : int
        Well-separation level, ``k >= 0``

    Returns
    ----------
    tuple
        the distance and a ``WellSepCertificate``
    """
    k = check_level(k)
    walls = complex.geodesic(u, v).walls
    if not walls:
        return 0, WellSepCertificate(k, (u, v), (), ())

    best = [1] * len(walls)
    parent = [None] * len(walls)
    for j in range(len(walls)):
        for i in range(j):
            if best[i] + 1 > best[j] and _chain_allowed(complex, walls[i], walls[j], k):
                best[j] = best[i] + 1
                parent[j] = i
    end = max(range(len(walls)), key=lambda j: (best[j], -j))
    chain = []
    while end is not None:
        chain.append(walls[end])
        end = parent[end]
    chain.reverse()
    degrees = tuple(wsep_degree(complex, a, b).degree for a, b in zip(chain, chain[1:]))
    return len(chain), WellSepCertificate(k, (u, v), tuple(chain), degrees)


def dk_bruteforce(complex, u: int, v: int, k: int) -> int:
    """Largest pairwise k-well-separated subset of W(u|v) by enumeration."""
    k = check_level(k)
    walls = sorted(complex.separating_set(u, v))
    if len(walls) > DK_ORACLE_LIMIT:
        raise InputError(
            "Brute force refuses {} separating walls (limit {})".format(len(walls), DK_ORACLE_LIMIT)
        )
    for size in range(len(walls), 1, -1):
        for subset in itertools.combinations(walls, size):
            if all(_chain_allowed(complex, a, b, k) for a, b in itertools.combinations(subset, 2)):
                return size
    return min(len(walls), 1)


def dk_matrix(complex, k: int, progress=False) -> np.ndarray:
    """All-pairs d_k table as a read-only int64 array."""
    k = check_level(k)
    n = complex.vertex_count
    table = np.zeros((n, n), dtype=np.int64)
    pairs = itertools.combinations(range(n), 2)
    if progress:
        pairs = tqdm(pairs, total=n * (n - 1) // 2, desc="d_{}".format(k))
    for u, v in pairs:
        table[u, v] = table[v, u] = dk(complex, u, v, k)[0]
    table.setflags(write=False)
    get_logger().debug("d_{} table over {} vertices, max {}".format(k, n, table.max(initial=0)))
    return table


def dk_to_convex(complex, x: int, subset: Iterable[int], k: int) -> int:
    """Pairwise k-well-separated walls separating ``x`` from a convex set."""
    return dk(complex, x, complex.gate(x, subset), k)[0]


@dataclass(frozen=True)
class MetricReport:
    passed: bool
    symmetric: bool
    zero_diagonal: bool
    triangle: bool
    witness: Optional[Tuple[int, ...]] = None

    def as_dict(self) -> ReprDict:
        return ReprDict(
            passed=self.passed,
            symmetric=self.symmetric,
            zero_diagonal=self.zero_diagonal,
            triangle=self.triangle,
            witness=list(self.witness) if self.witness else None,
            rootname="metric",
        )


def check_metric(table: np.ndarray) -> MetricReport:
    """Check the metric axioms on a square integer table.

    Zero exactly on the diagonal, symmetry and the triangle inequality are
    verified; the witness names the first offending pair or triple.
    """
    table = np.asarray(table)
    n = table.shape[0]
    symmetric = bool(np.array_equal(table, table.T))
    misplaced_zeros = (table == 0) != np.eye(n, dtype=bool)
    zero_diagonal = not misplaced_zeros.any()
    witness = None
    if not symmetric:
        witness = tuple(int(i) for i in np.argwhere(table != table.T)[0])
    elif not zero_diagonal:
        witness = tuple(int(i) for i in np.argwhere(misplaced_zeros)[0])

    triangle = True
    for y in range(n):
        through = table[:, y][:, None] + table[y][None, :]
        bad = np.argwhere(through < table)
        if len(bad):
            triangle = False
            if witness is None:
                x, z = bad[0]
                witness = (int(x), y, int(z))
            break
    return MetricReport(symmetric and zero_diagonal and triangle, symmetric, zero_diagonal, triangle, witness)


@dataclass(frozen=True)
class ProjectionDefectReport:
    k: int
    defect: int
    bound: int
    witness: Optional[Tuple[int, int, int]] = None

    @property
    def passed(self) -> bool:
        return self.defect <= self.bound

    def as_dict(self) -> ReprDict:
        return ReprDict(
            k=self.k,
            defect=self.defect,
            bound=self.bound,
            passed=self.passed,
            witness=list(self.witness) if self.witness else None,
            rootname="projection_defect",
        )


def geodesic_projection_defect(complex, path, k: int) -> ProjectionDefectReport:
    """Largest d_k(x,y) + d_k(y,z) - d_k(x,z) over ordered triples on ``path``.

    On a combinatorial geodesic the defect never exceeds ``k + 3``.
    """
    k = check_level(k)
    vertices = path.vertices
    m = len(vertices)
    if m < 3:
        return ProjectionDefectReport(k, 0, k + 3)
    table = np.zeros((m, m), dtype=np.int64)
    for i, j in itertools.combinations(range(m), 2):
        table[i, j] = table[j, i] = dk(complex, vertices[i], vertices[j], k)[0]

    defect, witness = 0, None
    for j in range(1, m - 1):
        # rows: x before y, columns: z after y
        excess = table[:j, j][:, None] + table[j, j + 1 :][None, :] - table[:j, j + 1 :]
        i, l = np.unravel_index(np.argmax(excess), excess.shape)
        if excess[i, l] > defect:
            defect = int(excess[i, l])
            witness = (vertices[i], vertices[j], vertices[j + 1 + l])
    return ProjectionDefectReport(k, defect, k + 3, witness)
