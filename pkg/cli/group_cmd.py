import argparse

from cli.common import ok
from groups.group_engine import build_g, centralizer, normal_form, right_cosets
from groups.signed_perm import format_notation, parse_notation
from models import CommandResult, GroupModel

NAME = "group"


def register(subparsers, parents: list[argparse.ArgumentParser]):
    parser = subparsers.add_parser(NAME, parents=parents, help="the groups G_{2n+1} of signed permutations")
    parser.add_argument("--n", type=int, required=True)
    action = parser.add_mutually_exclusive_group()
    action.add_argument("--order", action="store_true", help="order of G_{2n+1} (default)")
    action.add_argument("--centralizer", action="store_true", help="the centralizer C(a)")
    action.add_argument("--cosets", action="store_true", help="canonical right coset representatives of C(a)")
    action.add_argument("--normal-form", metavar="ELT", help="normal form of an element, e.g. '(3,2,-1)'")
    action.add_argument("--export", action="store_true", help="generators and elements as JSON")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> CommandResult:
    G = build_g(args.n, args.config.MAX_ELEMENTS)
    if args.centralizer:
        H = centralizer(G, G.a)
        return ok(
            NAME,
            {"order": H.order, "elements": [format_notation(h) for h in H.elements]},
            f"|C(a)| = {H.order}",
        )
    if args.cosets:
        cosets = right_cosets(G, centralizer(G, G.a))
        reps = [format_notation(c.representative) for c in cosets]
        return ok(NAME, {"count": len(reps), "representatives": reps}, f"{len(reps)} right cosets of C(a)")
    if args.normal_form:
        nf = normal_form(G, parse_notation(args.normal_form))
        payload = {"prefix": nf.prefix, "exponent": nf.exponent, "diagonal": format_notation(nf.diagonal)}
        return ok(NAME, payload, f"{args.normal_form} = {nf.prefix}·b^{nf.exponent}·{format_notation(nf.diagonal)}")
    if args.export:
        model = GroupModel(
            size=G.m,
            order=G.order,
            generators=[format_notation(g) for g in G.generators],
            elements=[format_notation(g) for g in G.elements],
        )
        return ok(NAME, model.model_dump(), f"G_{G.m} exported")
    return ok(NAME, G.order, f"|G_{G.m}| = {G.order}")
