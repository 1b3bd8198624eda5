# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

"""
    ``cubemorse`` command line. Exit codes: 0 pass, 1 a checked property
    failed, 2 usage or input error.
"""

import argparse
import logging
import sys

from ..cubes import CubeComplex
from ..generators import (
    RaagPresentation,
    emit_cxc,
    gen_balanced_tree,
    gen_grid,
    gen_path,
    gen_product,
    gen_random_median,
    gen_random_tree,
    gen_star,
    load_complex,
    raag_hull,
)
from ..metric import bilipschitz_check, build_gamma, dk, export_dot
from ..morse import SublinearGauge, excursion_scan, gromov_product
from ..runtime import CubeMorseError, ReprDict, get_logger
from ..separation import wall_pair_report

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

usage = "cubemorse {gen,info,analyze,dk,gamma,excursion,gromov,verify,pipeline} ..."


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so pipelines can
    validate every line before running any."""

    def error(self, message):
        raise CubeMorseError("{}: {}".format(self.prog, message))


def _add_output(parser):
    parser.add_argument("-o", "--output", help="write CXC to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cubemorse", description=usage)
    parser.add_argument(
        "-V", "--verbose", help="log construction details", action="store_true"
    )
    parser.add_argument("-q", "--quiet", help="only log warnings and errors", action="store_true")
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)
    commands.required = True

    gen = commands.add_parser("gen", help="generate an instance as CXC")
    kinds = gen.add_subparsers(dest="kind", parser_class=_Parser)
    kinds.required = True
    p = kinds.add_parser("grid", help="product of paths")
    p.add_argument("widths", type=int, nargs="+")
    _add_output(p)
    p = kinds.add_parser("path", help="path with N edges")
    p.add_argument("length", type=int)
    _add_output(p)
    p = kinds.add_parser("tree", help="random, balanced or star tree")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int)
    p.add_argument("--arity", type=int)
    p.add_argument("--depth", type=int)
    p.add_argument("--star", type=int, help="star with this many leaves")
    _add_output(p)
    p = kinds.add_parser("raag", help="hull of a ball in a RAAG Cayley graph")
    p.add_argument("--graph", default="", help="commutation edges, e.g. a-b,b-c")
    p.add_argument("--extra", default="", help="generators without commutations, e.g. c")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--ambient-radius", type=int)
    _add_output(p)
    p = kinds.add_parser("random", help="seeded random median graph")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int, required=True)
    _add_output(p)
    p = kinds.add_parser("product", help="box product of two CXC files")
    p.add_argument("first")
    p.add_argument("second")
    _add_output(p)

    p = commands.add_parser("info", help="vertices, edges, walls, dimension, diameter")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--json", action="store_true")

    p = commands.add_parser("analyze", help="wall pair relations and degrees")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--walls", type=int, nargs=2, metavar=("H1", "H2"))

    p = commands.add_parser("dk", help="well-separation distance")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--from", dest="source", type=int, required=True)
    p.add_argument("--to", dest="target", type=int, required=True)
    p.add_argument("--certificate", action="store_true")

    p = commands.add_parser("gamma", help="well-separation graph")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--dot", help="write the graph in DOT format")
    p.add_argument("--check-bilipschitz", action="store_true")

    p = commands.add_parser("excursion", help="excursion walls along a geodesic")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--from", dest="source", type=int, required=True)
    p.add_argument("--to", dest="target", type=int, required=True)
    p.add_argument("--gauge", default="const", help="const, sqrt, log, pow:P or logpow:P:Q")

    p = commands.add_parser("gromov", help="combinatorial Gromov product")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)

    p = commands.add_parser("verify", help="run the verification suite")
    p.add_argument("--plan", help="JSON plan file")
    p.add_argument("--instance", action="append", help="instance spec or CXC path")
    p.add_argument("--k", type=int, action="append", help="level to test")
    p.add_argument("--check", action="append", help="check id, or 'all'")
    p.add_argument("--seed", type=int)
    p.add_argument("--quadruples", type=int)
    p.add_argument("--geodesics", type=int)
    p.add_argument("--progress", action="store_true")

    p = commands.add_parser("pipeline", help="run subcommands listed in a file")
    p.add_argument("config")
    return parser


def _emit(complex: CubeComplex, output) -> int:
    text = emit_cxc(complex)
    if output:
        with open(output, "w", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS


def _cmd_gen(args) -> int:
    logger = get_logger()
    if args.kind == "grid":
        complex = gen_grid(args.widths)
    elif args.kind == "path":
        complex = gen_path(args.length)
    elif args.kind == "tree":
        if args.star is not None:
            complex = gen_star(args.star)
        elif args.arity is not None or args.depth is not None:
            complex = gen_balanced_tree(args.arity, args.depth)
        elif args.size is not None:
            complex = gen_random_tree(args.seed, args.size)
        else:
            raise CubeMorseError("gen tree needs --size, --arity/--depth or --star")
    elif args.kind == "raag":
        complex = raag_hull(RaagPresentation.parse(args.graph, args.extra), args.radius, args.ambient_radius)
    elif args.kind == "random":
        complex = gen_random_median(args.seed, args.size)
    else:
        complex = gen_product(load_complex(args.first), load_complex(args.second))
    logger.info("generated {}".format(complex))
    return _emit(complex, args.output)


def _cmd_info(args) -> int:
    c = load_complex(args.input)
    if args.json:
        report = ReprDict(
            vertices=c.vertex_count,
            edges=len(c.edges),
            walls=len(c.walls),
            dimension=c.dimension,
            diameter=c.diameter,
            rootname="info",
        )
        print(report.to_json())
    else:
        print("\t".join(str(x) for x in (c.vertex_count, len(c.edges), len(c.walls), c.dimension, c.diameter)))
    return EXIT_PASS


def _cmd_analyze(args) -> int:
    c = load_complex(args.input)
    if args.walls:
        pairs = [tuple(args.walls)]
    else:
        pairs = [(a, b) for a in range(len(c.walls)) for b in range(a + 1, len(c.walls))]
    for h1, h2 in pairs:
        r = wall_pair_report(c, h1, h2)
        wsep = "-" if r.wsep_degree is None else str(r.wsep_degree)
        print("{}\t{}\t{}\t{}\t{}".format(h1, h2, r.relation, r.sep_degree, wsep))
    return EXIT_PASS


def _cmd_dk(args) -> int:
    c = load_complex(args.input)
    distance, certificate = dk(c, args.source, args.target, args.k)
    print(distance)
    if args.certificate:
        print(" ".join(str(h) for h in certificate.chain))
    return EXIT_PASS


def _cmd_gamma(args) -> int:
    c = load_complex(args.input)
    gamma = build_gamma(c, args.k)
    if args.dot:
        with open(args.dot, "w", newline="\n") as f:
            f.write(export_dot(gamma))
    print("{}\t{}\t{}".format(gamma.vertex_count, gamma.graph.number_of_edges(), gamma.diameter))
    if args.check_bilipschitz:
        report = bilipschitz_check(c, args.k, gamma)
        if report.passed:
            print("BILIPSCHITZ PASS pairs={} tight={}".format(report.pairs_checked, report.tight_pairs))
        else:
            u, v, d, g = report.witness
            print("BILIPSCHITZ FAIL pair={},{} dk={} dgamma={}".format(u, v, d, g))
            return EXIT_FAIL
    return EXIT_PASS


def _cmd_excursion(args) -> int:
    c = load_complex(args.input)
    gauge = SublinearGauge.parse(args.gauge)
    report = excursion_scan(c, c.geodesic(args.source, args.target), gauge)
    for step in report.per_step:
        wsep = "-" if step.wsep is None else str(step.wsep)
        print("{}\t{}\t{}\t{}\t{}".format(step.wall, step.time, step.gap, wsep, step.bound))
    print("BEST_C {}".format(report.best_constant))
    return EXIT_PASS


def _cmd_gromov(args) -> int:
    c = load_complex(args.input)
    product = gromov_product(c, args.base, args.x, args.y)
    m = c.median(args.base, args.x, args.y)
    print("{}\t{}\t{}".format(product, m, c.dist1(args.base, m)))
    return EXIT_PASS


def _cmd_verify(args) -> int:
    from .verify import plan_from_args, run_verify

    return run_verify(plan_from_args(args), progress=args.progress)


def _cmd_pipeline(args) -> int:
    from .pipeline import run_pipeline

    with open(args.config, "r") as f:
        return run_pipeline(f.read(), log_level(args))


_COMMANDS = {
    "gen": _cmd_gen,
    "info": _cmd_info,
    "analyze": _cmd_analyze,
    "dk": _cmd_dk,
    "gamma": _cmd_gamma,
    "excursion": _cmd_excursion,
    "gromov": _cmd_gromov,
    "verify": _cmd_verify,
    "pipeline": _cmd_pipeline,
}


def log_level(args, default=logging.INFO) -> int:
    if args.verbose:
        return logging.DEBUG
    if args.quiet:
        return logging.WARNING
    return default


def run(args, default_level=logging.INFO) -> int:
    """Dispatch parsed arguments; errors of the package map to exit 2.

    ``default_level`` applies when neither ``-V`` nor ``-q`` was given.
    """
    get_logger(log_level(args, default_level), force_lvl=True)
    try:
        return _COMMANDS[args.command](args)
    except (CubeMorseError, OSError) as e:
        get_logger().error(str(e))
        return EXIT_INPUT


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except CubeMorseError as e:
        get_logger().error(str(e))
        return EXIT_INPUT
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
