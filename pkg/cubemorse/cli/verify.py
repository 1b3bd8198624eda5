# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

"""
    The verification suite: exact checks of the quantitative statements on
    finite instances. Each check returns ``(passed, detail)`` and the
    runner prints one line per instance, check and level::

        CHECK <id> k=<k or -> <instance> PASS|FAIL <detail>
"""

import itertools
import json
import os
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from ..cubes import CubeComplex, helly_check
from ..generators import GeneratorSpec
from ..metric import (
    DEFAULT_QUADRUPLES,
    DEFAULT_SEED,
    DK_ORACLE_LIMIT,
    EXHAUSTIVE_QUADRUPLE_LIMIT,
    bilipschitz_check,
    check_metric,
    dk,
    dk_bruteforce,
    dk_matrix,
    four_point_delta,
    geodesic_projection_defect,
)
from ..morse import gromov_product
from ..runtime import CubeMorseError, InputError, get_logger
from ..separation import longest_chain, wall_index, wsep_degree

DEFAULT_GEODESICS = 60
HELLY_TRIPLES = 100
EXHAUSTIVE_TRIPLE_LIMIT = 40


class PlanError(InputError):
    """This exception is raised when a verification plan is malformed: no
    instances, no checks, unknown check ids or negative levels."""

    pass


@dataclass
class VerifyPlan:
    instances: List[str]
    levels: List[int] = field(default_factory=lambda: [0])
    checks: List[str] = field(default_factory=lambda: ["all"])
    seed: int = DEFAULT_SEED
    quadruples: int = DEFAULT_QUADRUPLES
    geodesics: int = DEFAULT_GEODESICS

    @classmethod
    def from_dict(cls, data: Dict) -> "VerifyPlan":
        if not isinstance(data, dict):
            raise PlanError("A plan must be a JSON object")
        unknown = set(data) - {"instances", "levels", "checks", "seed", "quadruples", "geodesics"}
        if unknown:
            raise PlanError("Unknown plan keys: {}".format(", ".join(sorted(unknown))))
        plan = cls(instances=list(data.get("instances", [])))
        for key in ("levels", "checks", "seed", "quadruples", "geodesics"):
            if key in data:
                setattr(plan, key, data[key])
        return plan

    def expanded_checks(self) -> List[str]:
        if "all" in self.checks:
            return list(CHECKS)
        return list(self.checks)

    def validate(self) -> "VerifyPlan":
        if not self.instances:
            raise PlanError("A plan needs at least one instance")
        if not self.checks:
            raise PlanError("A plan needs at least one check")
        unknown = [c for c in self.checks if c != "all" and c not in CHECKS]
        if unknown:
            raise PlanError("Unknown checks: {}".format(", ".join(unknown)))
        if not self.levels or any(not isinstance(k, int) or isinstance(k, bool) or k < 0 for k in self.levels):
            raise PlanError("Levels must be a nonempty list of nonnegative integers")
        for name in ("seed", "quadruples", "geodesics"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < (0 if name == "seed" else 1):
                raise PlanError("Bad plan value {}={!r}".format(name, value))
        return self


def load_plan(path: str) -> VerifyPlan:
    if not os.path.isfile(path):
        raise PlanError("{} does not exist".format(path))
    with open(path, "r") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise PlanError("{}: {}".format(path, e))
    return VerifyPlan.from_dict(data)


def plan_from_args(args) -> VerifyPlan:
    """Plan file first, then command line flags override its entries."""
    plan = load_plan(args.plan) if args.plan else VerifyPlan(instances=[])
    if args.instance:
        plan.instances = list(args.instance)
    if args.k:
        plan.levels = list(args.k)
    if args.check:
        plan.checks = list(args.check)
    for name in ("seed", "quadruples", "geodesics"):
        value = getattr(args, name)
        if value is not None:
            setattr(plan, name, value)
    return plan.validate()


# ----------------------------------------------
# Checks
# ----------------------------------------------


@dataclass
class _Context:
    complex: CubeComplex
    plan: VerifyPlan
    progress: bool = False
    _dk: Dict[int, np.ndarray] = field(default_factory=dict)

    def dk_table(self, k: int) -> np.ndarray:
        if k not in self._dk:
            self._dk[k] = dk_matrix(self.complex, k, progress=self.progress)
        return self._dk[k]

    def vertex_pairs(self) -> List[Tuple[int, int]]:
        """All ordered-free pairs, or a seeded sample of ``plan.geodesics``."""
        pairs = list(itertools.combinations(range(self.complex.vertex_count), 2))
        if len(pairs) <= self.plan.geodesics:
            return pairs
        return sorted(random.Random(self.plan.seed).sample(pairs, self.plan.geodesics))


def check_dist_eq_walls(ctx: _Context, k=None):
    c = ctx.complex
    if not c.walls:
        return True, "pairs=0"
    sides = c.side_matrix.astype(np.int64)
    hamming = sides.T @ (1 - sides) + (1 - sides).T @ sides
    bad = np.argwhere(hamming != c.dist_table)
    if len(bad):
        u, v = bad[0]
        return False, "pair={},{}".format(u, v)
    return True, "pairs={}".format(c.vertex_count * (c.vertex_count - 1) // 2)


def check_helly(ctx: _Context, k=None):
    c = ctx.complex
    rng = random.Random(ctx.plan.seed)
    n = c.vertex_count
    for trial in range(HELLY_TRIPLES):
        family = [c.interval(rng.randrange(n), rng.randrange(n)) for _ in range(3)]
        report = helly_check(c, family)
        if not report.passed:
            return False, "trial={}".format(trial)
    return True, "triples={}".format(HELLY_TRIPLES)


def check_chain_in_geodesic(ctx: _Context, k=None):
    c = ctx.complex
    if not c.walls:
        return True, "geodesics=0"
    for u, v in ctx.vertex_pairs():
        walls = c.geodesic(u, v).walls
        need = len(walls) // c.dimension
        found = len(longest_chain(c, walls))
        if found < need:
            return False, "pair={},{} chain={} need={}".format(u, v, found, need)
    return True, "geodesics={}".format(len(ctx.vertex_pairs()))


def check_projection_defect(ctx: _Context, k: int):
    c = ctx.complex
    worst = 0
    for u, v in ctx.vertex_pairs():
        report = geodesic_projection_defect(c, c.geodesic(u, v), k)
        worst = max(worst, report.defect)
        if not report.passed:
            return False, "pair={},{} defect={} bound={}".format(u, v, report.defect, report.bound)
    return True, "max_defect={} bound={}".format(worst, k + 3)


def check_bilipschitz(ctx: _Context, k: int):
    report = bilipschitz_check(ctx.complex, k)
    if report.passed:
        return True, "pairs={} tight={}".format(report.pairs_checked, report.tight_pairs)
    u, v, d, g = report.witness
    return False, "pair={},{} dk={} dgamma={}".format(u, v, d, g)


def check_four_point(ctx: _Context, k: int):
    samples = None if ctx.complex.vertex_count <= EXHAUSTIVE_QUADRUPLE_LIMIT else ctx.plan.quadruples
    report = four_point_delta(
        ctx.complex, k, samples=samples, seed=ctx.plan.seed, table=ctx.dk_table(k), progress=ctx.progress
    )
    detail = "delta={} bound={} quadruples={}".format(report.max_defect, report.bound, report.sampled_quadruples)
    return report.passed, detail


def check_dk_oracle(ctx: _Context, k: int):
    c = ctx.complex
    compared = 0
    for u, v in ctx.vertex_pairs():
        if c.dist1(u, v) > DK_ORACLE_LIMIT:
            continue
        fast, slow = dk(c, u, v, k)[0], dk_bruteforce(c, u, v, k)
        compared += 1
        if fast != slow:
            return False, "pair={},{} dp={} oracle={}".format(u, v, fast, slow)
    return True, "pairs={}".format(compared)


def check_dk_metric(ctx: _Context, k: int):
    report = check_metric(ctx.dk_table(k))
    if report.passed:
        return True, "vertices={}".format(ctx.complex.vertex_count)
    return False, "witness={}".format(",".join(str(x) for x in report.witness))


def check_wsep_monotone(ctx: _Context, k=None):
    c = ctx.complex
    index = wall_index(c)
    triples = 0
    for h1, h3 in itertools.combinations(range(len(c.walls)), 2):
        if index.crosses(h1, h3):
            continue
        outer = wsep_degree(c, h1, h3).degree
        for h2 in range(len(c.walls)):
            if not index.separates(h2, h1, h3):
                continue
            triples += 1
            bound = min(wsep_degree(c, h1, h2).degree, wsep_degree(c, h2, h3).degree)
            if outer > bound:
                return False, "walls={},{},{}".format(h1, h2, h3)
    return True, "triples={}".format(triples)


def check_gromov_median(ctx: _Context, k=None):
    c = ctx.complex
    n = c.vertex_count
    if n <= EXHAUSTIVE_TRIPLE_LIMIT:
        triples = itertools.product(range(n), repeat=3)
    else:
        rng = random.Random(ctx.plan.seed)
        triples = [tuple(rng.randrange(n) for _ in range(3)) for _ in range(ctx.plan.quadruples)]
    count = 0
    for o, x, y in triples:
        count += 1
        if gromov_product(c, o, x, y) != c.dist1(o, c.median(o, x, y)):
            return False, "triple={},{},{}".format(o, x, y)
    return True, "triples={}".format(count)


# id -> (check, depends on k)
CHECKS: Dict[str, Tuple[Callable, bool]] = {
    "dist-eq-walls": (check_dist_eq_walls, False),
    "helly": (check_helly, False),
    "chain-in-geodesic": (check_chain_in_geodesic, False),
    "wsep-monotone": (check_wsep_monotone, False),
    "gromov-median": (check_gromov_median, False),
    "dk-metric": (check_dk_metric, True),
    "dk-oracle": (check_dk_oracle, True),
    "projection-defect": (check_projection_defect, True),
    "bilipschitz": (check_bilipschitz, True),
    "fourpoint": (check_four_point, True),
}


def run_verify(plan: VerifyPlan, progress=False, out=print) -> int:
    """Run every check of ``plan``; 0 if all pass, 1 on a failure, 2 when
    an instance cannot be loaded."""
    logger = get_logger()
    plan.validate()
    instances = []
    for text in plan.instances:
        try:
            instances.append((text, GeneratorSpec.parse(text).build()))
        except CubeMorseError as e:
            logger.error("cannot load instance {}: {}".format(text, e))
            return 2
    logger.info("verifying {} instances, levels {}".format(len(instances), plan.levels))

    failures = 0
    for text, complex in instances:
        ctx = _Context(complex, plan, progress)
        for check_id in plan.expanded_checks():
            check, uses_k = CHECKS[check_id]
            for k in plan.levels if uses_k else [None]:
                passed, detail = check(ctx, k)
                failures += not passed
                out(
                    "CHECK {} k={} {} {} {}".format(
                        check_id, "-" if k is None else k, text, "PASS" if passed else "FAIL", detail
                    )
                )
    logger.info("verification finished with {} failures".format(failures))
    return 1 if failures else 0
