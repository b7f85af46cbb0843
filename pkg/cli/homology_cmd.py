import argparse

from cli.common import load_model, ok, parse_quandle_arg, y_action
from homology.chains import chain_from_model
from homology.groups import homology, homology_class
from models import ChainModel, CommandResult

NAME = "homology"


def register(subparsers, parents: list[argparse.ArgumentParser]):
    parser = subparsers.add_parser(NAME, parents=parents, help="integral symmetric quandle homology")
    parser.add_argument("--quandle", default="tilde:1", help="tilde:N, dihedral:M or a quandle JSON file")
    parser.add_argument("--flavor", choices=["R", "Q", "Rrho", "Qrho"], default="Qrho")
    parser.add_argument("--degree", type=int, required=True)
    parser.add_argument("--checkerboard", action="store_true", help="coefficients in the two-point (X,ρ)-set")
    parser.add_argument("--class", dest="class_chain", metavar="CHAIN.json", help="coordinates of a cycle's class")
    parser.add_argument("--pair-range", choices=["full", "restricted"], default=None)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> CommandResult:
    source = parse_quandle_arg(args.quandle, args.config)
    Y = y_action(args, source.quandle)
    result = homology(
        source.quandle,
        source.rho,
        Y,
        args.flavor,
        args.degree,
        pair_range=args.pair_range,
        max_cells=args.config.MAX_MATRIX_CELLS,
    )
    model = result.to_model()
    payload = {"free_rank": model.free_rank, "torsion": model.torsion}
    summary = f"H_{args.degree} ({args.flavor}) = {model.describe()}"
    if args.class_chain:
        chain = chain_from_model(load_model(args.class_chain, ChainModel), source.quandle, Y)
        coords = homology_class(result, chain)
        payload["class"] = coords.model_dump()
        summary += f"; class coordinates free={coords.free} torsion={coords.torsion}"
    return ok(NAME, payload, summary)
