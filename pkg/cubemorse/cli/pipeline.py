# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

import logging
import shlex

from ..runtime import CubeMorseError, get_logger


def run_pipeline(text: str, level=logging.INFO) -> int:
    """Run one subcommand per line, stopping at the first nonzero exit.

    Every line is parsed before anything runs, so a bad flag anywhere
    leaves no partial output files behind. Blank lines and ``#`` comments
    are skipped; nested pipelines are refused. Lines without ``-V`` or
    ``-q`` run at ``level``, the level of the enclosing invocation.
    """
    from .main import EXIT_INPUT, build_parser, run

    logger = get_logger()
    parser = build_parser()
    jobs = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            argv = shlex.split(line)
            if argv and argv[0] == "cubemorse":
                argv = argv[1:]
            args = parser.parse_args(argv)
        except (CubeMorseError, ValueError) as e:
            logger.error("pipeline line {}: {}".format(number, e))
            return EXIT_INPUT
        if args.command == "pipeline":
            logger.error("pipeline line {}: pipelines cannot be nested".format(number))
            return EXIT_INPUT
        jobs.append((number, args))

    worst = 0
    for number, args in jobs:
        code = run(args, level)
        logger.info("pipeline line {} exited with {}".format(number, code))
        worst = max(worst, code)
        if code:
            break
    return worst
