import argparse

from cli.common import load_model, ok, parse_quandle_arg, y_action
from errors import UsageError
from homology.chains import chain_from_model
from homology.scan import build_context, small_support_null_scan, support_of_chain
from models import ChainModel, CommandResult

NAME = "scan"


def register(subparsers, parents: list[argparse.ArgumentParser]):
    parser = subparsers.add_parser(NAME, parents=parents, help="search for nontrivial cycles with small support")
    parser.add_argument("--quandle", default="tilde:1")
    parser.add_argument("--checkerboard", action="store_true")
    parser.add_argument("--degree", type=int, default=3)
    parser.add_argument("--max-support", type=int, default=3)
    parser.add_argument("--min-support", type=int, default=1)
    parser.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--trials", type=int, default=None)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--support-chain", metavar="CHAIN.json", help="scan exactly the classes a chain touches")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> CommandResult:
    source = parse_quandle_arg(args.quandle, args.config)
    if source.rho is None:
        raise UsageError("scans need a quandle with a good involution")
    Y = y_action(args, source.quandle)
    context = build_context(source.quandle, source.rho, Y, args.degree, max_cells=args.config.MAX_MATRIX_CELLS)
    supports = None
    if args.support_chain:
        chain = chain_from_model(load_model(args.support_chain, ChainModel), source.quandle, Y)
        supports = [support_of_chain(context, chain)]
    report = small_support_null_scan(
        source.quandle,
        source.rho,
        Y,
        degree=args.degree,
        max_support=args.max_support,
        min_support=args.min_support,
        mode=args.mode,
        seed=args.seed,
        trials=args.trials,
        workers=args.workers,
        supports=supports,
        context=context,
    )
    found = len(report.counterexamples)
    summary = f"{report.supports_checked} supports checked, {found} counterexample(s)"
    return ok(NAME, report.model_dump(), summary)
