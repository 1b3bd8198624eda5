# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

from .longest_chain import longest_chain
from .wall_relations import (
    WallIndex,
    crossers,
    crosses,
    facing_triples,
    is_facing_triple,
    is_k_separated,
    separates,
    sep_degree,
    wall_index,
)
from .wsep_degree import (
    EXHAUSTIVE_WSEP_LIMIT,
    WallPairReport,
    WellSepReport,
    is_k_well_separated,
    max_facing_free_subset,
    wall_pair_report,
    wsep_degree,
)
