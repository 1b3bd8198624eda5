# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

import pytest
from hypothesis import settings

from cubemorse.cubes import CubeComplex
from cubemorse.generators import (
    RaagPresentation,
    gen_balanced_tree,
    gen_grid,
    gen_path,
    gen_star,
    raag_hull,
)
from cubemorse.runtime import get_logger

settings.register_profile("cubemorse", max_examples=25, deadline=None)
settings.load_profile("cubemorse")

# bind the handler to the session stream, not to one test's capture
get_logger()


def cycle_edges(n):
    return [(i, (i + 1) % n) for i in range(n)]


def vertical_walls(grid, width):
    """Walls crossed moving along x on the bottom row, left to right."""
    return [grid.edge_walls[(x, x + 1)] for x in range(width - 1)]


def horizontal_walls(grid, width, height):
    """Walls crossed moving along y on the left column, bottom to top."""
    return [grid.edge_walls[(width * y, width * (y + 1))] for y in range(height - 1)]


@pytest.fixture(scope="session")
def grid4():
    return gen_grid([4, 4])


@pytest.fixture(scope="session")
def grid5():
    return gen_grid([5, 5])


@pytest.fixture(scope="session")
def cube3():
    return gen_grid([2, 2, 2])


@pytest.fixture(scope="session")
def path5():
    return gen_path(5)


@pytest.fixture(scope="session")
def path20():
    return gen_path(20)


@pytest.fixture(scope="session")
def tripod():
    return gen_star(3)


@pytest.fixture(scope="session")
def binary_tree():
    return gen_balanced_tree(2, 3)


@pytest.fixture(scope="session")
def single_vertex():
    return CubeComplex(1, [])


@pytest.fixture(scope="session")
def c6():
    return CubeComplex(6, cycle_edges(6), validate=False)


@pytest.fixture(scope="session")
def k23():
    return CubeComplex(5, [(i, j) for i in (0, 1) for j in (2, 3, 4)], validate=False)


@pytest.fixture(scope="session")
def free2():
    return RaagPresentation.parse("", "a,b")


@pytest.fixture(scope="session")
def z2():
    return RaagPresentation.parse("a-b", "")


@pytest.fixture(scope="session")
def z2_free_z():
    return RaagPresentation.parse("a-b", "c")


@pytest.fixture(scope="session")
def free2_hull(free2):
    return raag_hull(free2, 2)
