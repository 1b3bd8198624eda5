# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

from .complexes import (
    DEFAULT_SEED,
    gen_balanced_tree,
    gen_grid,
    gen_path,
    gen_product,
    gen_random_median,
    gen_random_tree,
    gen_star,
    gen_tree,
)
from .cxc import CxcParseError, emit_cxc, load_complex, parse_cxc, save_complex
from .generator_spec import GeneratorSpec
from .raag import (
    EnlargementError,
    RaagGroup,
    RaagPresentation,
    ball_sizes,
    raag_ball,
    raag_hull,
    raag_hull_words,
)
