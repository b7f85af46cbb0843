import argparse

from cli.common import load_model, ok
from homology.chains import chain_from_model, checkerboard_action, evaluate, pi_forget
from homology.cocycles import COCYCLES, is_pm_monic, is_symmetric_cocycle, values_bounded
from models import ChainModel, CommandResult
from quandles.cosets import build_tilde_r

NAME = "cocycle"


def register(subparsers, parents: list[argparse.ArgumentParser]):
    parser = subparsers.add_parser(NAME, parents=parents, help="the 3-cocycles φ, φ′, φ″ on R̃_3")
    parser.add_argument("--name", choices=sorted(COCYCLES), required=True)
    action = parser.add_mutually_exclusive_group()
    action.add_argument("--eval", dest="chain", metavar="CHAIN.json", help="value on a chain (Y slot is forgotten)")
    action.add_argument("--check", action="store_true", help="cocycle condition in the Qrho flavor")
    action.add_argument("--monic", action="store_true", help="± monic test")
    action.add_argument("--bounded", action="store_true", help="values in {-1, 0, 1}")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> CommandResult:
    ext = build_tilde_r(1, max_elements=args.config.MAX_ELEMENTS)
    theta = COCYCLES[args.name](ext)
    if args.chain:
        model = load_model(args.chain, ChainModel)
        has_y = any(term.y is not None for term in model.terms)
        Y = checkerboard_action(ext.quandle) if has_y else None
        chain = chain_from_model(model, ext.quandle, Y)
        if chain.has_y:
            chain = pi_forget(chain)
        value = evaluate(theta, chain)
        return ok(NAME, value, f"{args.name} = {value}")
    if args.monic:
        value = is_pm_monic(theta, ext.quandle, ext.rho)
        return ok(NAME, value, f"{args.name} ± monic: {value}")
    if args.bounded:
        value = values_bounded(theta)
        return ok(NAME, value, f"{args.name} bounded: {value}")
    value = is_symmetric_cocycle(theta, ext.quandle, ext.rho, "Qrho")
    return ok(NAME, value, f"{args.name} is a Qrho 3-cocycle: {value}")
