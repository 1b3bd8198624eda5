# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from ..runtime import InputError, ReprDict

FAMILIES = ("const", "sqrt", "log", "pow", "logpow")


@dataclass(frozen=True)
class SublinearGauge:
    """A sublinear gauge evaluated at integer times.

    ``kappa(t) = t**p * (1 + ln t)**q`` for ``t >= 1`` covers every family:
    ``const`` (p = q = 0), ``sqrt`` (p = 1/2), ``log`` (q = 1), ``pow:P``
    and ``logpow:P:Q``. ``kappa(0)`` is read as ``kappa(1)``. Values are
    exact rationals of the floating point evaluation, so every later
    comparison is exact.
    """

    family: str
    p: Fraction = Fraction(0)
    q: Fraction = Fraction(0)

    @classmethod
    def parse(cls, text: str) -> "SublinearGauge":
        """Parse ``const``, ``sqrt``, ``log``, ``pow:P`` or ``logpow:P:Q``."""
        parts = text.strip().split(":")
        family, args = parts[0], parts[1:]
        try:
            args = [Fraction(a) for a in args]
        except (ValueError, ZeroDivisionError):
            raise InputError("Bad gauge parameters in {!r}".format(text))
        arity = {"const": 0, "sqrt": 0, "log": 0, "pow": 1, "logpow": 2}
        if family not in arity or len(args) != arity[family]:
            raise InputError(
                "Unknown gauge {!r}, expected one of const, sqrt, log, pow:P, logpow:P:Q".format(text)
            )
        if family == "const":
            return cls("const")
        if family == "sqrt":
            return cls("sqrt", Fraction(1, 2))
        if family == "log":
            return cls("log", Fraction(0), Fraction(1))
        if family == "pow":
            if not 0 < args[0] < 1:
                raise InputError("pow:P needs 0 < P < 1, got {}".format(args[0]))
            return cls("pow", args[0])
        p, q = args
        if p < 0 or q < 0 or p + q > 1 or p == 1:
            raise InputError("logpow:P:Q needs P, Q >= 0, P + Q <= 1 and P < 1")
        return cls("logpow", p, q)

    def __str__(self):
        if self.family == "pow":
            return "pow:{}".format(self.p)
        if self.family == "logpow":
            return "logpow:{}:{}".format(self.p, self.q)
        return self.family

    def __call__(self, t: int) -> Fraction:
        return _evaluate(self.p, self.q, max(int(t), 1))


@lru_cache(maxsize=None)
def _evaluate(p: Fraction, q: Fraction, t: int) -> Fraction:
    if p == 0 and q == 0:
        return Fraction(1)
    if p == Fraction(1, 2) and q == 0:
        root = math.isqrt(t)
        if root * root == t:
            return Fraction(root)
        return Fraction(math.sqrt(t))
    value = 1.0
    if p:
        value *= float(t) ** float(p)
    if q:
        value *= (1.0 + math.log(t)) ** float(q)
    return Fraction(value)


@dataclass(frozen=True)
class GaugeReport:
    gauge: str
    t_max: int
    passed: bool
    failures: Tuple[str, ...] = ()
    witness: Optional[int] = None

    def as_dict(self) -> ReprDict:
        return ReprDict(
            gauge=self.gauge,
            t_max=self.t_max,
            passed=self.passed,
            failures=list(self.failures),
            witness=self.witness,
            rootname="gauge",
        )


def check_gauge(gauge: SublinearGauge, t_max: int, scales=(2, 3, 4)) -> GaugeReport:
    """Check the gauge axioms on the integer grid ``0..t_max``.

    Lower bound 1, monotonicity, concavity through second differences from
    ``t = 1``, ``kappa(a t) <= a kappa(t)`` for the given scales, and a
    non-increasing ``kappa(t)/t`` envelope. The witness is the first
    failing ``t``.
    """
    if t_max < 1:
        raise InputError("t_max must be positive, got {}".format(t_max))
    values = [gauge(t) for t in range(t_max + 1)]
    failures: List[Tuple[int, str]] = []

    def fail(t, what):
        failures.append((t, what))

    for t, value in enumerate(values):
        if value < 1:
            fail(t, "below 1")
        if t and value < values[t - 1]:
            fail(t, "decreasing")
        if t >= 3 and values[t] - 2 * values[t - 1] + values[t - 2] > 0:
            fail(t, "not concave")
        if t >= 1:
            for a in scales:
                if a * t <= t_max and values[a * t] > a * value:
                    fail(t, "kappa({} t) > {} kappa(t)".format(a, a))
            if t >= 2 and value / t > values[t - 1] / (t - 1):
                fail(t, "kappa(t)/t increasing")
    if not failures:
        return GaugeReport(str(gauge), t_max, True)
    failures.sort(key=lambda f: f[0])
    return GaugeReport(str(gauge), t_max, False, tuple(what for _, what in failures), failures[0][0])
