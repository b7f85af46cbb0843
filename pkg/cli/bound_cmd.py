import argparse

from cli.common import load_models, ok
from homology.chains import checkerboard_action
from homology.cocycles import COCYCLES, triple_point_bound
from models import CommandResult, TriplePointRecordModel
from quandles.cosets import build_tilde_r

NAME = "bound"


def register(subparsers, parents: list[argparse.ArgumentParser]):
    parser = subparsers.add_parser(NAME, parents=parents, help="triple-point lower bound from weighted records")
    parser.add_argument("--records", required=True, metavar="RECORDS.json")
    parser.add_argument("--cocycle", choices=sorted(COCYCLES), default="phi_prime")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> CommandResult:
    ext = build_tilde_r(1, max_elements=args.config.MAX_ELEMENTS)
    records = load_models(args.records, TriplePointRecordModel)
    Y = checkerboard_action(ext.quandle) if any(r.y is not None for r in records) else None
    theta = COCYCLES[args.cocycle](ext)
    value = triple_point_bound(records, ext.quandle, ext.rho, Y, theta)
    return ok(NAME, value, f"t(F) >= {value}")
