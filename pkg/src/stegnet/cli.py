"""Command-line front end.

Exit codes: 0 success, 1 infeasible instance or failed ``--check``,
2 usage or input error. Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from stegnet import oracle
from stegnet.attack import Method, TerminalSpec, plan_cut
from stegnet.comms import prob_to_additive, steiner_plan
from stegnet.dominator import mwds_exact, mwds_greedy
from stegnet.errors import NoPathError, StegnetError
from stegnet.graph import format_weight, parse_graph, random_graph, serialize_graph

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_TOL = 1e-9
_METHODS = {"super": Method.SUPER_TERMINAL, "contract": Method.CONTRACTION}


class CheckFailed(Exception):
    pass


def _read_graph(path: str):
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    return parse_graph(data)


def _id_list(text: str) -> list[str]:
    ids = [tok.strip() for tok in text.split(",") if tok.strip()]
    if not ids:
        raise argparse.ArgumentTypeError("expected a comma-separated list of vertex ids")
    return ids


def cmd_cut(args: argparse.Namespace) -> list[str]:
    g = _read_graph(args.graph)
    spec = TerminalSpec(args.encoders, args.decoders)
    method = _METHODS[args.method]
    plan = plan_cut(g, spec, method)
    lines = [f"cost {format_weight(plan.total_cost)}"]
    lines += [f"cut {u} {v} {format_weight(g.edge_weight(u, v))}" for u, v in plan.removed_edges]
    if args.check:
        if not oracle.separates(g, spec, plan.removed_edges):
            raise CheckFailed("removed edges leave an encoder connected to a decoder")
        alt = Method.CONTRACTION if method is Method.SUPER_TERMINAL else Method.SUPER_TERMINAL
        other = plan_cut(g, spec, alt)
        if abs(other.total_cost - plan.total_cost) > _TOL:
            raise CheckFailed(
                f"{other.method.value} cost {other.total_cost} differs from {plan.total_cost}"
            )
        if g.num_vertices <= oracle.CUT_BUDGET.max_vertices:
            expected = oracle.oracle_min_cut(g, spec)
            if abs(expected - plan.total_cost) > _TOL:
                raise CheckFailed(f"brute-force minimum is {expected}, plan costs {plan.total_cost}")
    return lines


def cmd_mwds(args: argparse.Namespace) -> list[str]:
    g = _read_graph(args.graph)
    result = mwds_exact(g) if args.method == "exact" else mwds_greedy(g)
    lines = [f"weight {format_weight(result.total_weight)}"]
    lines += [f"member {v}" for v in result.sorted_members]
    if args.check:
        if not oracle.dominates(g, result.members):
            raise CheckFailed("returned set does not dominate the graph")
        if g.num_vertices <= oracle.MWDS_BUDGET.max_vertices:
            best = oracle.oracle_mwds(g)
            if args.method == "exact" and abs(best - result.total_weight) > _TOL:
                raise CheckFailed(f"brute-force optimum is {best}, exact solver gave {result.total_weight}")
            if result.total_weight < best - _TOL:
                raise CheckFailed(f"weight {result.total_weight} below brute-force optimum {best}")
    return lines


def cmd_steiner(args: argparse.Namespace) -> list[str]:
    g = _read_graph(args.graph)
    if args.from_probabilities:
        g = prob_to_additive(g)
    plan = steiner_plan(g, args.terminals)
    lines = [f"weight {format_weight(plan.total_weight)}"]
    lines += [f"edge {u} {v} {format_weight(g.edge_weight(u, v))}" for u, v in plan.edges]
    lines.append(f"variant {plan.variant.value}")
    return lines


def cmd_gen(args: argparse.Namespace) -> list[str]:
    g = random_graph(
        args.n, args.p, (args.wmin, args.wmax), args.seed, integer_weights=args.integer
    )
    return serialize_graph(g).splitlines()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stegnet", description="Analyse weighted steganographer networks (SGN files)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cut", help="minimum-cost edge removal separating encoders from decoders")
    p.add_argument("graph", help="SGN file, or '-' for stdin")
    p.add_argument("--encoders", type=_id_list, required=True, metavar="S1,S2,..")
    p.add_argument("--decoders", type=_id_list, required=True, metavar="T1,T2,..")
    p.add_argument("--method", choices=sorted(_METHODS), default="contract")
    p.add_argument("--check", action="store_true", help="verify against the other method and brute force")
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("mwds", help="minimum-weight dominating set")
    p.add_argument("graph", help="SGN file, or '-' for stdin")
    p.add_argument("--method", choices=("exact", "greedy"), default="exact")
    p.add_argument("--check", action="store_true", help="verify domination and, if small, optimality")
    p.set_defaults(func=cmd_mwds)

    p = sub.add_parser("steiner", help="low-risk edge set connecting terminals")
    p.add_argument("graph", help="SGN file, or '-' for stdin")
    p.add_argument("--terminals", type=_id_list, required=True, metavar="A,B,..")
    p.add_argument(
        "--from-probabilities",
        action="store_true",
        help="treat edge weights as success probabilities and convert with -ln p",
    )
    p.set_defaults(func=cmd_steiner)

    p = sub.add_parser("gen", help="emit a seeded random SGN graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--wmin", type=float, default=1.0)
    p.add_argument("--wmax", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--integer", action="store_true", help="draw integer weights in [wmin, wmax]")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        lines = args.func(args)
    except CheckFailed as exc:
        print(f"stegnet: check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except NoPathError as exc:
        print(f"stegnet: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (StegnetError, OSError) as exc:
        print(f"stegnet: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write("".join(line + "\n" for line in lines))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
