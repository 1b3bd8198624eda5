# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

"""
    Well-separation degree of a disjoint wall pair: the largest subset of
    their crossers that contains no facing triple. This is a maximum
    independent set in a 3-uniform hypergraph, solved exactly.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..runtime import InputError, PreconditionError, ReprDict, get_logger
from .wall_relations import _distinct, wall_index

EXHAUSTIVE_WSEP_LIMIT = 20


@dataclass(frozen=True)
class WellSepReport:
    degree: int
    witness: Tuple[int, ...]


@dataclass(frozen=True)
class WallPairReport:
    pair: Tuple[int, int]
    relation: str
    crossers: Tuple[int, ...]
    sep_degree: int
    wsep_degree: Optional[int] = None
    witness: Optional[Tuple[int, ...]] = None

    def as_dict(self) -> ReprDict:
        return ReprDict(
            pair=list(self.pair),
            relation=self.relation,
            crossers=list(self.crossers),
            sep_degree=self.sep_degree,
            wsep_degree=self.wsep_degree,
            witness=list(self.witness) if self.witness is not None else None,
            rootname="wall_pair",
        )


def _triple_partners(walls: Sequence[int], triples) -> Dict[int, List[Tuple[int, int]]]:
    partners = {h: [] for h in walls}
    for a, b, c in triples:
        partners[a].append((b, c))
        partners[b].append((a, c))
        partners[c].append((a, b))
    return partners


def _exhaustive(walls: Sequence[int], triples) -> Tuple[int, ...]:
    if len(walls) > EXHAUSTIVE_WSEP_LIMIT:
        raise InputError(
            "Exhaustive search refuses {} crossers (limit {})".format(
                len(walls), EXHAUSTIVE_WSEP_LIMIT
            )
        )
    forbidden = [frozenset(t) for t in triples]
    for size in range(len(walls), -1, -1):
        for subset in itertools.combinations(walls, size):
            chosen = frozenset(subset)
            if not any(t <= chosen for t in forbidden):
                return subset
    return ()


def _branch_and_bound(walls: Sequence[int], triples) -> Tuple[int, ...]:
    logger = get_logger()
    partners = _triple_partners(walls, triples)
    free = [h for h in walls if not partners[h]]
    # constrained walls, most facing triples first
    order = sorted((h for h in walls if partners[h]), key=lambda h: (-len(partners[h]), h))

    def completes_triple(h, chosen):
        return any(a in chosen and b in chosen for a, b in partners[h])

    greedy = set()
    for h in reversed(order):
        if not completes_triple(h, greedy):
            greedy.add(h)
    best = [sorted(greedy)]
    nodes = 0

    def search(i, chosen):
        nonlocal nodes
        nodes += 1
        if len(chosen) + len(order) - i <= len(best[0]):
            return
        if i == len(order):
            best[0] = sorted(chosen)
            return
        h = order[i]
        if not completes_triple(h, chosen):
            chosen.add(h)
            search(i + 1, chosen)
            chosen.discard(h)
        search(i + 1, chosen)

    search(0, set())
    logger.debug("wsep branch and bound: {} nodes over {} walls".format(nodes, len(order)))
    return tuple(sorted(free + best[0]))


def max_facing_free_subset(complex, walls, method="auto") -> Tuple[int, ...]:
    """Largest subset of ``walls`` without a facing triple."""
    return _max_facing_free(wall_index(complex), walls, method)


def _max_facing_free(index, walls, method) -> Tuple[int, ...]:
    walls = sorted(walls)
    triples = [t for t in itertools.combinations(walls, 3) if index.is_facing(*t)]
    if not triples:
        return tuple(walls)
    if method == "exhaustive":
        return tuple(sorted(_exhaustive(walls, triples)))
    if method in ("auto", "branch"):
        return _branch_and_bound(walls, triples)
    raise InputError("Unknown wsep method {!r}".format(method))


def wsep_degree(complex, h1: int, h2: int, method="auto") -> WellSepReport:
    """Exact well-separation degree of two disjoint walls.

    ``h1`` and ``h2`` are k-well-separated exactly when the returned
    degree is at most k.

    Parameters
    ----------
    complex : CubeComplex
        The ambient complex
    h1, h2 : int
        Disjoint wall ids
    method : str
        ``auto`` or ``branch`` for branch and bound, ``exhaustive`` for
        subset enumeration (at most ``EXHAUSTIVE_WSEP_LIMIT`` crossers)

    Returns
    ----------
    WellSepReport
        the degree and one maximum facing-triple-free witness
    """
    h1, h2 = _distinct(complex, h1, h2)
    index = wall_index(complex)
    if index.crosses(h1, h2):
        raise PreconditionError("Walls {} and {} cross; well-separation needs disjoint walls".format(h1, h2))
    if method == "auto":
        return _cached_wsep(index, min(h1, h2), max(h1, h2))
    witness = _max_facing_free(index, index.crossers(h1, h2), method)
    return WellSepReport(len(witness), witness)


def _cached_wsep(index, a: int, b: int) -> WellSepReport:
    cache = index.wsep_cache
    report = cache.get((a, b))
    if report is None:
        witness = _max_facing_free(index, index.crossers(a, b), "auto")
        report = cache[(a, b)] = WellSepReport(len(witness), witness)
    return report


def is_k_well_separated(complex, h1: int, h2: int, k: int) -> bool:
    h1, h2 = _distinct(complex, h1, h2)
    if wall_index(complex).crosses(h1, h2):
        return False
    return wsep_degree(complex, h1, h2).degree <= k


def wall_pair_report(complex, h1: int, h2: int) -> WallPairReport:
    h1, h2 = _distinct(complex, h1, h2)
    index = wall_index(complex)
    shared = tuple(sorted(index.crossers(h1, h2)))
    if index.crosses(h1, h2):
        return WallPairReport((h1, h2), "crossing", shared, len(shared))
    report = wsep_degree(complex, h1, h2)
    return WallPairReport((h1, h2), "disjoint", shared, len(shared), report.degree, report.witness)
