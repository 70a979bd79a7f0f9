"""Argument parser setup and command execution."""

import argparse
import logging
from typing import Optional

from ..config import Config
from ..logging import log_event
from ..types import OutputFormat, PairStrategy, Route, Strategy
from .formatting import render
from .handlers import RunConfig, dispatch


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", type=int, required=True, help="Field characteristic (prime)")
    common.add_argument("-n", "--arity", type=int, default=2, help="Number of variables (default: 2)")
    common.add_argument("--seed", type=int, default=None, help="Seed for every random choice")
    common.add_argument("-o", "--out", default=None, help="Write the report here instead of stdout")
    common.add_argument(
        "--format",
        dest="fmt",
        choices=[f.value for f in OutputFormat],
        default=None,
        help="Output format (default depends on the command)",
    )
    common.add_argument(
        "--timing", action="store_true", help="Fill wall-clock columns (breaks byte-identical reruns)"
    )
    return common


def _add_strategy(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--strategy",
        choices=[s.value for s in Strategy],
        default=Strategy.AUTO.value,
        help="Determinant strategy (default: auto)",
    )


def _add_route(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--route",
        choices=[r.value for r in Route],
        default=Route.PRODUCT.value,
        help="How g(t) = Res_x(f, x^p - x) is built (default: product)",
    )


def create_parser() -> argparse.ArgumentParser:
    """Build the ``ffelim`` parser with one subcommand per pipeline."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="ffelim",
        description="Resultant elimination, root counting and nonvanishing decisions over GF(p).",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    res_cmd = commands.add_parser("res", parents=[common], help="Parametric resultant of two polynomials")
    res_cmd.add_argument("polys", nargs=2, metavar="POLY")
    res_cmd.add_argument("--var", default=None, help="Variable to eliminate (default: last)")
    _add_strategy(res_cmd)

    elim = commands.add_parser("eliminate", parents=[common], help="Rabin basis of a system")
    elim.add_argument("polys", nargs="+", metavar="POLY")
    elim.add_argument("--order", default=None, help="Comma-separated variables, e.g. x2,x1")
    elim.add_argument(
        "--pair-strategy",
        choices=[s.value for s in PairStrategy],
        default=PairStrategy.INPUT_ORDER.value,
    )
    _add_strategy(elim)

    count = commands.add_parser("count", parents=[common], help="Count t-values with a root x in GF(p)")
    count.add_argument("polys", nargs=1, metavar="F")
    count.add_argument("--dmax", type=int, default=None, help="Largest extension degree (default: m)")
    count.add_argument("--transcript", action="store_true", help="Include the gcd derivation")
    _add_route(count)

    decide = commands.add_parser("decide", parents=[common], help="Decide f(t, x) != 0 on GF(p)^2")
    decide.add_argument("polys", nargs=1, metavar="F")
    decide.add_argument("--transcript", action="store_true", help="Include the gcd derivation")
    _add_route(decide)

    gen = commands.add_parser("gen", help="Generate sparse instances")
    kinds = gen.add_subparsers(dest="kind", required=True)
    nonres = kinds.add_parser("nonresidue", parents=[common], help="Product of gamma*x^r - delta")
    nonres.add_argument(
        "--factors", action="append", default=[], metavar="GAMMA,DELTA,R", help="Repeat per factor"
    )
    nonres.add_argument("--nu", type=int, default=None, help="Order bound checked (default: p-1)")
    eis = kinds.add_parser("eisenstein", parents=[common], help="Sparse Eisenstein polynomial")
    eis.add_argument("--pi", type=int, required=True, help="Eisenstein prime")
    eis.add_argument("--exponents", required=True, help="Increasing exponents, e.g. 1,3,5")
    eis.add_argument("--nu", type=int, default=None)
    subst = kinds.add_parser("subst", parents=[common], help="h(x^r) for a root-free h")
    subst.add_argument("polys", nargs=1, metavar="H")
    subst.add_argument("-r", type=int, required=True, help="Exponent coprime to p-1")
    subst.add_argument("--nu", type=int, default=None)

    bench = commands.add_parser("bench", parents=[common], help="Term-growth benchmark CSV")
    bench.add_argument("-d", type=int, default=3, help="Degree in the eliminated variable")
    bench.add_argument("-L", type=int, default=2, help="Terms per coefficient")
    bench.add_argument("--trials", type=int, default=1)

    oracle = commands.add_parser("oracle", help="Brute-force cross-checks")
    checks = oracle.add_subparsers(dest="kind", required=True)
    roots = checks.add_parser("roots", parents=[common], help="Per-degree t counts by enumeration")
    roots.add_argument("polys", nargs=1, metavar="F")
    roots.add_argument("--dmax", type=int, default=None)
    zeros = checks.add_parser("zeros", parents=[common], help="Common zeros in GF(p)^n")
    zeros.add_argument("polys", nargs="*", metavar="POLY")

    return parser


def build_run_config(args: argparse.Namespace, settings: Config) -> RunConfig:
    """Map parsed arguments onto a RunConfig; absent flags keep the defaults."""
    fields = {
        name: getattr(args, name)
        for name in (
            "kind", "arity", "polys", "var", "order", "dmax", "seed", "transcript",
            "out", "timing", "factors", "pi", "exponents", "r", "nu", "d", "L", "trials",
        )
        if getattr(args, name, None) is not None
    }
    if getattr(args, "strategy", None):
        fields["strategy"] = Strategy(args.strategy)
    if getattr(args, "pair_strategy", None):
        fields["pair_strategy"] = PairStrategy(args.pair_strategy)
    if getattr(args, "route", None):
        fields["route"] = Route(args.route)
    if getattr(args, "fmt", None):
        fields["fmt"] = OutputFormat(args.fmt)
    return RunConfig(command=args.command, p=args.p, settings=settings, **fields)


def run_command(args: argparse.Namespace, settings: Config, logger: logging.Logger) -> str:
    """Execute one parsed invocation and return the rendered report.

    The report is written to ``--out`` when given; the text is returned either way.
    """
    run = build_run_config(args, settings)
    output = render(dispatch(run), run.fmt)
    if run.out:
        with open(run.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(output)
        log_event(logger, "report_written", command=run.command, path=run.out)
    return output
