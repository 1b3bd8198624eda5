# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

from .main import build_parser, main
from .pipeline import run_pipeline
from .verify import CHECKS, PlanError, VerifyPlan, load_plan, run_verify
