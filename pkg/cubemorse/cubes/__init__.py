# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

from .cube_complex import CubeComplex, GeodesicPath, VertexOrientation
from .helly_check import HellyReport, helly_check
from .hyperplanes import Hyperplane, StructuralError, derive_walls
from .validate_median import MedianReport, NotMedianError, validate_median
