# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np
from tqdm import tqdm

from ..runtime import InputError, ReprDict, get_logger
from .well_separation import check_level, dk_matrix

EXHAUSTIVE_QUADRUPLE_LIMIT = 30
DEFAULT_QUADRUPLES = 100000
DEFAULT_SEED = 0

_BATCH = 10000


@dataclass(frozen=True)
class DeltaReport:
    k: int
    sampled_quadruples: int
    max_defect: Fraction
    bound: int
    exhaustive: bool
    witness: Optional[Tuple[int, int, int, int]] = None

    @property
    def passed(self) -> bool:
        return self.max_defect <= self.bound

    def as_dict(self) -> ReprDict:
        return ReprDict(
            k=self.k,
            sampled_quadruples=self.sampled_quadruples,
            max_defect=self.max_defect,
            bound=self.bound,
            exhaustive=self.exhaustive,
            passed=self.passed,
            witness=list(self.witness) if self.witness else None,
            rootname="four_point",
        )


def _defects(table: np.ndarray, quads: np.ndarray) -> np.ndarray:
    """Twice the four-point defect: largest minus middle of the pair sums."""
    a, b, c, d = quads.T
    sums = np.stack(
        [table[a, b] + table[c, d], table[a, c] + table[b, d], table[a, d] + table[b, c]], axis=1
    )
    sums.sort(axis=1)
    return sums[:, 2] - sums[:, 1]


def _chunks(quadruples):
    while True:
        chunk = list(itertools.islice(quadruples, _BATCH))
        if not chunk:
            return
        yield np.array(chunk, dtype=np.int64)


def four_point_delta(
    complex, k: int, samples=None, seed=DEFAULT_SEED, table=None, progress=False
) -> DeltaReport:
    """Four-point hyperbolicity defect of (vertices, d_k).

    Every quadruple is scanned up to ``EXHAUSTIVE_QUADRUPLE_LIMIT``
    vertices unless ``samples`` is given; otherwise ``samples`` (default
    ``DEFAULT_QUADRUPLES``) quadruples are drawn from a seeded generator.
    Quadruples with a repeated vertex contribute 0.

    Parameters
    ----------
    complex : CubeComplex
        The ambient complex
    k : int
        Well-separation level
    samples : int
        Number of random quadruples, forces sampling when given
    seed : int
        Seed of ``numpy.random.default_rng``
    table : numpy.ndarray
        A precomputed ``dk_matrix(complex, k)``
    progress : bool
        Show a tqdm bar over quadruple batches

    Returns
    ----------
    DeltaReport
        the largest defect against the bound ``9(k+2)``
    """
    k = check_level(k)
    if table is None:
        table = dk_matrix(complex, k)
    n = complex.vertex_count
    bound = 9 * (k + 2)
    if samples is not None and samples < 1:
        raise InputError("The quadruple budget must be positive, got {}".format(samples))

    exhaustive = samples is None and n <= EXHAUSTIVE_QUADRUPLE_LIMIT
    if exhaustive:
        total = n * (n - 1) * (n - 2) * (n - 3) // 24
        batches = _chunks(itertools.combinations(range(n), 4))
    else:
        total = DEFAULT_QUADRUPLES if samples is None else samples
        rng = np.random.default_rng(seed)
        sizes = [min(_BATCH, total - start) for start in range(0, total, _BATCH)]
        batches = (rng.integers(0, n, size=(size, 4)) for size in sizes)

    best, witness, seen = 0, None, 0
    bar = tqdm(total=total, desc="four-point", disable=not progress)
    for quads in batches:
        defects = _defects(table, quads)
        i = int(np.argmax(defects))
        if defects[i] > best:
            best = int(defects[i])
            witness = tuple(int(q) for q in quads[i])
        seen += len(quads)
        bar.update(len(quads))
    bar.close()
    get_logger().debug("four-point scan of {} quadruples at k={}".format(seen, k))
    return DeltaReport(k, seen, Fraction(best, 2), bound, exhaustive, witness)
