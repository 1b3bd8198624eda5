# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

import random
from typing import Sequence

import numpy as np

from ..cubes import CubeComplex
from ..runtime import InputError, get_logger

DEFAULT_SEED = 0


def _positive(name: str, value, minimum=1) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < minimum:
        raise InputError("{} must be an integer >= {}, got {!r}".format(name, minimum, value))
    return int(value)


def gen_grid(widths: Sequence[int]) -> CubeComplex:
    """Product of paths with ``widths[i]`` vertices each.

    Vertex ids are mixed radix with the first coordinate varying fastest,
    so in a 4x4 grid vertex ``(x, y)`` has id ``x + 4 y``.
    """
    widths = [_positive("grid width", w) for w in widths]
    if not widths:
        raise InputError("A grid needs at least one width")
    strides = [1]
    for w in widths[:-1]:
        strides.append(strides[-1] * w)
    n = strides[-1] * widths[-1]
    edges = []
    for v in range(n):
        for w, stride in zip(widths, strides):
            if (v // stride) % w < w - 1:
                edges.append((v, v + stride))
    return CubeComplex(n, edges)


def gen_path(length: int) -> CubeComplex:
    """Path with ``length`` edges."""
    return gen_grid([_positive("path length", length, 0) + 1])


def gen_star(leaves: int) -> CubeComplex:
    """Star with centre 0; three leaves give the tripod."""
    leaves = _positive("leaf count", leaves, 0)
    return CubeComplex(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def gen_balanced_tree(arity: int, depth: int) -> CubeComplex:
    """Balanced tree numbered breadth first from the root 0."""
    arity = _positive("arity", arity)
    depth = _positive("depth", depth, 0)
    edges, frontier, n = [], [0], 1
    for _ in range(depth):
        children = []
        for parent in frontier:
            for _ in range(arity):
                edges.append((parent, n))
                children.append(n)
                n += 1
        frontier = children
    return CubeComplex(n, edges)


def gen_random_tree(seed: int, size: int) -> CubeComplex:
    """Random recursive tree: vertex i hangs off a uniform earlier vertex."""
    size = _positive("tree size", size)
    rng = random.Random(seed)
    return CubeComplex(size, [(rng.randrange(i), i) for i in range(1, size)])


def gen_tree(size=None, seed=DEFAULT_SEED, arity=None, depth=None) -> CubeComplex:
    """Balanced tree when ``arity`` and ``depth`` are given, else a seeded random tree."""
    if arity is not None or depth is not None:
        if arity is None or depth is None:
            raise InputError("A balanced tree needs both arity and depth")
        return gen_balanced_tree(arity, depth)
    if size is None:
        raise InputError("A random tree needs a size")
    return gen_random_tree(seed, size)


def gen_product(a: CubeComplex, b: CubeComplex) -> CubeComplex:
    """Box product; vertex ``(i, j)`` gets id ``i + a.vertex_count * j``."""
    na, nb = a.vertex_count, b.vertex_count
    edges = [(u + na * j, v + na * j) for j in range(nb) for u, v in a.edges]
    edges += [(i + na * u, i + na * v) for u, v in b.edges for i in range(na)]
    return CubeComplex(na * nb, edges)


def gen_random_median(seed: int, target_size: int) -> CubeComplex:
    """Random median graph of at least ``target_size`` vertices.

    Grown by peripheral expansions: each step picks two vertices ``u, v``,
    takes the convex set ``interval(u, v)``, with probability one half cut
    down to the halfspace of a random wall on the side of ``u``, and glues
    a copy of that set along it. Expansion along a convex set keeps the
    graph median, and the result is validated again on return.
    """
    target_size = _positive("target size", target_size)
    logger = get_logger()
    rng = random.Random(seed)
    n, edges = 1, []
    steps = 0
    while n < target_size:
        current = CubeComplex(n, edges, validate=False)
        u, v = rng.randrange(n), rng.randrange(n)
        piece = set(current.interval(u, v))
        if current.walls and rng.random() < 0.5:
            wall = current.walls[rng.randrange(len(current.walls))]
            piece &= wall.side(wall.sign_of(u))
        copy = {c: n + i for i, c in enumerate(sorted(piece))}
        edges = edges + [(c, copy[c]) for c in sorted(piece)]
        edges += [(copy[x], copy[y]) for x, y in current.edges if x in piece and y in piece]
        n += len(copy)
        steps += 1
    logger.debug("random median graph: {} vertices after {} expansions".format(n, steps))
    return CubeComplex(n, edges)
