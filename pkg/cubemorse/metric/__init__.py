# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

from .four_point_delta import (
    DEFAULT_QUADRUPLES,
    DEFAULT_SEED,
    EXHAUSTIVE_QUADRUPLE_LIMIT,
    DeltaReport,
    four_point_delta,
)
from .gamma_graph import (
    BilipschitzReport,
    GammaGraph,
    PathProjectionReport,
    bilipschitz_check,
    build_gamma,
    export_dot,
    gamma_threshold,
    project_path,
)
from .well_separation import (
    DK_ORACLE_LIMIT,
    MetricReport,
    ProjectionDefectReport,
    WellSepCertificate,
    check_level,
    check_metric,
    dk,
    dk_bruteforce,
    dk_matrix,
    dk_to_convex,
    geodesic_projection_defect,
)
