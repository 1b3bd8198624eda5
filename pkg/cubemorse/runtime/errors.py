# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause


class CubeMorseError(Exception):
    """Base class of every error raised by the package."""

    pass


class InputError(CubeMorseError):
    """This exception is raised when user supplied data is malformed: bad
    vertex ids, graphs that are not connected or not simple, unknown gauge
    names, invalid plans."""

    pass


class PreconditionError(CubeMorseError):
    """This exception is raised when an operation is called outside of its
    domain, for instance a gate onto a set that is not convex or the
    well-separation degree of two crossing hyperplanes."""

    pass
