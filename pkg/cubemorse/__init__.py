# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

"""Combinatorics of sublinearly Morse boundaries of finite CAT(0) cube complexes."""

import os

with open(os.path.join(os.path.dirname(__file__), "version.txt")) as f:
    __version__ = f.read().strip()

from .cubes import CubeComplex, GeodesicPath, Hyperplane, VertexOrientation
from .runtime import CubeMorseError, InputError, PreconditionError, ReprDict, get_logger
