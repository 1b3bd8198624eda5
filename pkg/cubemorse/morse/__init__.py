# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

from .contraction_profile import ContractionSample, contraction_profile
from .excursion_scan import ExcursionReport, ExcursionStep, excursion_scan, validate_excursion
from .gauge import FAMILIES, GaugeReport, SublinearGauge, check_gauge
from .roller import gromov_product, hyp_basis_member, hyp_neighborhood
