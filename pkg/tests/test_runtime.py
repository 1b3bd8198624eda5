# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

import json
import logging
from fractions import Fraction

import numpy as np
import pytest

from cubemorse.cubes import NotMedianError, StructuralError
from cubemorse.generators import CxcParseError, EnlargementError
from cubemorse.runtime import CubeMorseError, InputError, PreconditionError, ReprDict, get_logger
from cubemorse.runtime.logging import package_handlers


class TestReprDict:
    def test_json_is_sorted_and_exact(self):
        report = ReprDict(b=Fraction(3, 2), a=np.int64(4), c={2, 1})
        assert report.to_json() == '{"a": 4, "b": "3/2", "c": [1, 2]}'

    def test_equal_reports_give_equal_bytes(self):
        one = ReprDict(x=1, y=[1, 2])
        two = ReprDict(y=[1, 2], x=1)
        assert one.to_json(indent=2) == two.to_json(indent=2)

    def test_nested_dicts_come_back_as_repr_dicts(self):
        report = ReprDict(inner={"k": 0}, rootname="outer")
        assert isinstance(report["inner"], ReprDict)
        data, meta = report._repr_json_()
        assert data == {"inner": {"k": 0}}
        assert meta["root"] == "outer"


class TestLogger:
    def teardown_method(self):
        get_logger(logging.WARNING, force_lvl=True)

    def test_single_package_handler(self):
        before = len(get_logger().handlers)
        logger = get_logger()
        assert len(logger.handlers) == before
        assert len(package_handlers(logger)) == 1
        assert logger.propagate is False

    def test_foreign_handler_does_not_hide_the_package_one(self):
        logger = logging.getLogger("cubemorse")
        own = package_handlers(logger)
        foreign = logging.NullHandler()
        for h in own:
            logger.removeHandler(h)
        logger.addHandler(foreign)
        try:
            assert len(package_handlers(get_logger())) == 1
        finally:
            logger.removeHandler(foreign)
            for h in package_handlers(logger):
                logger.removeHandler(h)
            for h in own:
                logger.addHandler(h)

    def test_default_leaves_level_alone(self):
        get_logger(logging.DEBUG, force_lvl=True)
        assert get_logger().level == logging.DEBUG

    def test_level_is_only_raised_unless_forced(self):
        get_logger("warning", force_lvl=True)
        assert get_logger("debug").level == logging.WARNING
        assert get_logger("error").level == logging.ERROR
        assert get_logger("info", force_lvl=True).level == logging.INFO


@pytest.mark.parametrize(
    "error, base",
    [
        (InputError, CubeMorseError),
        (PreconditionError, CubeMorseError),
        (StructuralError, CubeMorseError),
        (NotMedianError, InputError),
        (CxcParseError, InputError),
        (EnlargementError, CubeMorseError),
    ],
)
def test_error_hierarchy(error, base):
    assert issubclass(error, base)


def test_reports_serialise(grid4):
    from cubemorse.separation import wall_pair_report

    text = wall_pair_report(grid4, 0, 2).as_dict().to_json()
    assert json.loads(text)["relation"] == "disjoint"
