import argparse

from cli.common import ok
from models import CommandResult, QuandleModel
from quandles.core import (
    dihedral_quandle,
    enumerate_good_involutions,
    is_connected,
    is_involutory,
    verify_axioms,
    verify_good_involution,
)
from quandles.cosets import build_tilde_r, check_extension

NAME = "quandle"


def register(subparsers, parents: list[argparse.ArgumentParser]):
    parser = subparsers.add_parser(NAME, parents=parents, help="dihedral quandles and their extensions R̃_{2n+1}")
    parser.add_argument("--family", choices=["dihedral", "tilde"], required=True)
    parser.add_argument("--n", type=int, required=True, help="order m for dihedral, n for R̃_{2n+1}")
    action = parser.add_mutually_exclusive_group()
    action.add_argument("--table", action="store_true", help="operation table, row = left argument (default)")
    action.add_argument("--verify", action="store_true", help="quandle axioms, good involution and projection")
    action.add_argument("--connected", action="store_true")
    action.add_argument("--involutory", action="store_true")
    action.add_argument("--good-involutions", action="store_true", help="enumerate every good involution")
    action.add_argument("--export", action="store_true", help="quandle JSON with rho")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> CommandResult:
    if args.family == "tilde":
        ext = build_tilde_r(args.n, max_elements=args.config.MAX_ELEMENTS)
        Q, rho = ext.quandle, ext.rho
        title = f"R̃_{2 * args.n + 1}"
    else:
        ext = None
        Q, rho = dihedral_quandle(args.n), None
        title = f"R_{args.n}"

    if args.verify:
        reports = [verify_axioms(Q).model_dump()]
        if rho is not None:
            reports.append(verify_good_involution(Q, rho).model_dump())
        payload = {"reports": reports}
        if ext is not None:
            payload["projection"] = {
                "mapping": list(ext.projection.mapping),
                "extension": check_extension(ext.projection),
                "fiber_size": ext.projection.fiber_size(),
            }
        passed = all(r["passed"] for r in reports)
        return ok(NAME, payload, f"{title}: {'all checks pass' if passed else 'check failed'}")
    if args.connected:
        value = is_connected(Q)
        return ok(NAME, value, f"{title} connected: {value}")
    if args.involutory:
        value = is_involutory(Q)
        return ok(NAME, value, f"{title} involutory: {value}")
    if args.good_involutions:
        found = [g.describe() for g in enumerate_good_involutions(Q)]
        return ok(NAME, found, f"{title}: {len(found)} good involution(s)")
    if args.export:
        model = QuandleModel(
            labels=list(Q.labels), table=[list(r) for r in Q.table], rho=list(rho.rho) if rho else None
        )
        return ok(NAME, model.model_dump(), f"{title} exported")
    payload = {"labels": list(Q.labels), "table": [list(r) for r in Q.table]}
    if rho is not None:
        payload["rho"] = rho.describe()
    return ok(NAME, payload, f"{title}: {Q.size} elements")
