# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

"""
    CXC text format::

        cxc 1
        vertices N
        edge U V
        ...

    Lines starting with ``#`` and blank lines are ignored; ids are 0-based.
"""

import os

from ..cubes import CubeComplex
from ..runtime import InputError

CXC_VERSION = 1


class CxcParseError(InputError):
    """This exception is raised when CXC text is malformed. ``line`` is the
    1-based number of the offending line."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__("line {}: {}".format(line, message))


def _int(token: str, line: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise CxcParseError(line, "expected a nonnegative integer, got {!r}".format(token))
    return int(token)


def parse_cxc(text: str, validate=True) -> CubeComplex:
    header = []
    edges = {}
    n = None
    for number, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(header) == 0:
            if tokens != ["cxc", str(CXC_VERSION)]:
                raise CxcParseError(number, "expected 'cxc {}' header".format(CXC_VERSION))
            header.append(number)
        elif len(header) == 1:
            if len(tokens) != 2 or tokens[0] != "vertices":
                raise CxcParseError(number, "expected 'vertices N'")
            n = _int(tokens[1], number)
            if n < 1:
                raise CxcParseError(number, "a complex needs at least one vertex")
            header.append(number)
        else:
            if len(tokens) != 3 or tokens[0] != "edge":
                raise CxcParseError(number, "expected 'edge U V', got {!r}".format(line))
            u, v = _int(tokens[1], number), _int(tokens[2], number)
            if u >= n or v >= n:
                raise CxcParseError(number, "vertex id out of range 0..{}".format(n - 1))
            if u == v:
                raise CxcParseError(number, "self-loop at vertex {}".format(u))
            key = (min(u, v), max(u, v))
            if key in edges:
                raise CxcParseError(number, "duplicate edge {} {} (first on line {})".format(u, v, edges[key]))
            edges[key] = number
    if n is None:
        raise CxcParseError(len(text.split("\n")), "missing {} header".format("vertices" if header else "cxc"))
    return CubeComplex(n, sorted(edges), validate=validate)


def emit_cxc(complex: CubeComplex) -> str:
    lines = ["cxc {}".format(CXC_VERSION), "vertices {}".format(complex.vertex_count)]
    lines.extend("edge {} {}".format(u, v) for u, v in sorted(complex.edges))
    return "\n".join(lines) + "\n"


def load_complex(path: str) -> CubeComplex:
    """Read and validate a CXC file."""
    if not os.path.isfile(path):
        raise InputError("{} does not exist".format(path))
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except UnicodeDecodeError as e:
        raise InputError("{} is not UTF-8 text: {}".format(path, e))
    return parse_cxc(text)


def save_complex(complex: CubeComplex, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(emit_cxc(complex))
