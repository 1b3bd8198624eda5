# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

from .errors import CubeMorseError, InputError, PreconditionError
from .logging import get_logger
from .repr_dict import ReprDict
