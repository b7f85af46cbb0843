import argparse

from cli.common import ok, parse_quandle_arg
from coloring.colorings import count_colorings
from coloring.gauss_code import parse_gauss_code
from models import CommandResult

NAME = "color"


def register(subparsers, parents: list[argparse.ArgumentParser]):
    parser = subparsers.add_parser(NAME, parents=parents, help="count quandle colorings of a Gauss code")
    parser.add_argument("--quandle", default="dihedral:3")
    parser.add_argument("--gauss", required=True, help='e.g. "O1+U2+O3+U1+O2+U3+"; empty for the unknot')
    parser.add_argument("--nontrivial", action="store_true", help="report only the non-constant count")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> CommandResult:
    source = parse_quandle_arg(args.quandle, args.config)
    code = parse_gauss_code(args.gauss)
    total = count_colorings(source.quandle, code)
    nontrivial = total - source.quandle.size
    if args.nontrivial:
        return ok(NAME, nontrivial, f"{nontrivial} nontrivial colorings by {source.name}")
    payload = [{"code": str(code), "quandle": source.name, "total": total, "nontrivial": nontrivial}]
    return ok(NAME, payload, f"{total} colorings by {source.name} ({nontrivial} nontrivial)")
