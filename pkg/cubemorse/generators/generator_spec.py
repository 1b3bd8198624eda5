# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

"""
    A one-line language naming test instances, used by verification plans:

    ====================  ===========================================
    ``grid:4,4``          product of paths with 4 and 4 vertices
    ``path:20``           path with 20 edges
    ``tree:balanced:2:3`` balanced tree of arity 2 and depth 3
    ``tree:random:S:N``   seeded random tree on N vertices
    ``tree:star:3``       star with 3 leaves
    ``raag:a-b:c:2``      hull of the radius 2 ball, a and b commute
    ``random:S:N``        seeded random median graph, at least N vertices
    ``product:A*B``       box product of two instance specs
    ====================  ===========================================

    Anything else is read as the path of a CXC file.
"""

from dataclasses import dataclass
from typing import Tuple

from ..cubes import CubeComplex
from ..runtime import InputError
from .complexes import (
    gen_balanced_tree,
    gen_grid,
    gen_path,
    gen_product,
    gen_random_median,
    gen_random_tree,
    gen_star,
)
from .cxc import load_complex
from .raag import RaagPresentation, raag_hull

KINDS = ("grid", "path", "tree", "raag", "random", "product", "file")


def _ints(text: str, values, count=None) -> Tuple[int, ...]:
    try:
        numbers = tuple(int(v) for v in values)
    except ValueError:
        raise InputError("Bad integer parameter in instance spec {!r}".format(text))
    if count is not None and len(numbers) != count:
        raise InputError("Instance spec {!r} expects {} numbers".format(text, count))
    return numbers


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    params: Tuple
    text: str

    @classmethod
    def parse(cls, text: str) -> "GeneratorSpec":
        text = text.strip()
        kind, _, rest = text.partition(":")
        if kind == "product":
            parts = rest.split("*")
            if len(parts) != 2:
                raise InputError("product spec needs exactly two factors: {!r}".format(text))
            return cls("product", tuple(cls.parse(p) for p in parts), text)
        fields = rest.split(":") if rest else []
        if kind == "grid" and len(fields) == 1:
            widths = _ints(text, fields[0].split(","))
            if not widths or min(widths) < 1:
                raise InputError("grid widths must be positive: {!r}".format(text))
            return cls("grid", widths, text)
        if kind == "path" and len(fields) == 1:
            return cls("path", _ints(text, fields, 1), text)
        if kind == "tree" and fields:
            shape = fields[0]
            if shape == "balanced":
                return cls("tree", ("balanced",) + _ints(text, fields[1:], 2), text)
            if shape == "random":
                return cls("tree", ("random",) + _ints(text, fields[1:], 2), text)
            if shape == "star":
                return cls("tree", ("star",) + _ints(text, fields[1:], 1), text)
            raise InputError("Unknown tree shape in {!r}".format(text))
        if kind == "raag" and len(fields) == 3:
            (radius,) = _ints(text, fields[2:], 1)
            RaagPresentation.parse(fields[0], fields[1])
            return cls("raag", (fields[0], fields[1], radius), text)
        if kind == "random" and len(fields) == 2:
            return cls("random", _ints(text, fields, 2), text)
        if ":" in text and kind in KINDS:
            raise InputError("Malformed instance spec {!r}".format(text))
        return cls("file", (text,), text)

    def build(self) -> CubeComplex:
        if self.kind == "grid":
            return gen_grid(self.params)
        if self.kind == "path":
            return gen_path(self.params[0])
        if self.kind == "tree":
            shape, *args = self.params
            if shape == "balanced":
                return gen_balanced_tree(*args)
            if shape == "random":
                return gen_random_tree(*args)
            return gen_star(*args)
        if self.kind == "raag":
            graph, extra, radius = self.params
            return raag_hull(RaagPresentation.parse(graph, extra), radius)
        if self.kind == "random":
            return gen_random_median(*self.params)
        if self.kind == "product":
            return gen_product(self.params[0].build(), self.params[1].build())
        return load_complex(self.params[0])

    def __str__(self):
        return self.text
