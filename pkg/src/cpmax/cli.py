"""Command-line interface.

Subcommands read JSON from ``--input FILE`` or stdin and write canonical
JSON to stdout (DOT with ``--dot``), so outputs pipe into other
subcommands.  Exit codes: 0 success, 1 for domain answers in the negative
(not realisable, budget exceeded, on a wall), 2 for malformed input or
usage errors.  Errors are reported as structured JSON on stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import service as service_mod
from .chambers import (
    adjacency_graph,
    chamber_membership,
    graph_to_dot,
    graph_to_json,
    newton_skeleton,
    wall_system,
    newton_edge_system,
)
from .errors import (
    BadParameters,
    InvalidInput,
    LimitExceeded,
    OnWall,
    TermBudgetExceeded,
    ToolkitError,
)
from .feasibility import system_to_text
from .network import (
    DEFAULT_CHAIN_CAP,
    maximal_chains,
    network_from_json,
    network_to_dot,
    network_to_json,
)
from .payloads import chamber_payload, eval_payload, terms_payload, whatif_payload
from .realise import (
    DEFAULT_SEARCH_LIMIT,
    covering_pair_obstruction,
    eft_polynomial,
    realise,
    verify_realisation,
)
from .serialize import dumps, loads, parse_cost_vector
from .tropical import gen_fnk, poly_from_json, poly_to_json, product
from .whatif import predict_transitions, ray_trace

DEFAULT_TERM_BUDGET = 60


def _read_json(path: str | None):
    if path is None or path == "-":
        return loads(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise BadParameters(f"cannot read {path}: {exc}") from exc


def _load_network(args, attr="input"):
    return network_from_json(_read_json(getattr(args, attr)),
                             normalize=getattr(args, "normalize", False))


def _load_poly(args, attr="input"):
    obj = _read_json(getattr(args, attr))
    if isinstance(obj, dict) and "activities" in obj:
        # A network file is accepted anywhere a polynomial is: use its EFT.
        net = network_from_json(obj)
        return eft_polynomial(net, cap=args.max_chains), net
    return poly_from_json(obj), None


def _check_budget(poly, budget: int):
    if len(poly.support) > budget:
        raise TermBudgetExceeded(len(poly.support), budget)


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cpmax",
        description="Exact max-plus critical-path analysis for project networks.",
    )
    p.add_argument("--max-chains", type=int, default=DEFAULT_CHAIN_CAP,
                   help="cap on enumerated maximal chains")
    p.add_argument("--max-terms", type=int, default=DEFAULT_TERM_BUDGET,
                   help="term budget for adjacency/newton graphs")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp, help_text="input JSON file (default: stdin)"):
        sp.add_argument("--input", default=None, help=help_text)
        return sp

    sp = with_input(sub.add_parser("validate", help="check a network file"))
    sp.add_argument("--normalize", action="store_true",
                    help="drop redundant (short-cut) arcs instead of failing")
    sp.add_argument("--dot", action="store_true", help="emit DOT")

    sp = with_input(sub.add_parser("paths", help="maximal chains of a network"))

    sp = with_input(sub.add_parser("eft", help="EFT polynomial of a network"))
    sp.add_argument("--costs", default=None,
                    help="comma-separated costs; adds value and critical paths")

    sp = with_input(sub.add_parser("realise",
                                   help="find a chart realising a polynomial"))
    sp.add_argument("--limit", type=int, default=DEFAULT_SEARCH_LIMIT)

    sp = with_input(sub.add_parser("verify",
                                   help="check a chart against a polynomial"))
    sp.add_argument("--network", required=True, help="network JSON file")

    for name in ("adjacency", "newton"):
        sp = with_input(sub.add_parser(
            name, help=f"{name} graph of a polynomial (or of a network's EFT)"
        ))
        sp.add_argument("--dot", action="store_true", help="emit DOT")
        sp.add_argument("--debug-systems", action="store_true",
                        help="dump the feasibility systems to stderr")

    sp = with_input(sub.add_parser("chamber",
                                   help="chamber or wall at a cost vector"))
    sp.add_argument("--costs", required=True)

    sp = with_input(sub.add_parser("whatif",
                                   help="trace one activity cost up or down"))
    sp.add_argument("--costs", required=True)
    sp.add_argument("--activity", type=int, required=True)
    sp.add_argument("--direction", choices=("up", "down"), required=True)

    sp = sub.add_parser("gen-fnk", help="all k-subsets of 1..n as a polynomial")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)

    sp = with_input(sub.add_parser("dual", help="complement every term"))

    sp = sub.add_parser("product", help="product on disjoint variables")
    sp.add_argument("left", help="polynomial JSON file")
    sp.add_argument("right", help="polynomial JSON file")

    sp = sub.add_parser("serve", help="run the local HTTP service")
    sp.add_argument("--port", type=int, default=8787)
    sp.add_argument("--input", default=None, help="network JSON to preload")
    return p


def _run(args) -> int:
    cmd = args.command
    if cmd == "validate":
        net = _load_network(args)
        _emit(network_to_dot(net) if args.dot else dumps(network_to_json(net)))
        return 0
    if cmd == "paths":
        net = _load_network(args)
        chains = maximal_chains(net, cap=args.max_chains)
        _emit(dumps(terms_payload(chains)))
        return 0
    if cmd == "eft":
        net = _load_network(args)
        poly = eft_polynomial(net, cap=args.max_chains)
        out = poly_to_json(poly)
        if args.costs is not None:
            costs = parse_cost_vector(args.costs, net.n)
            out.update(eval_payload(poly.evaluate(costs), costs))
        _emit(dumps(out))
        return 0
    if cmd == "realise":
        poly, _ = _load_poly(args)
        witness = realise(poly, limit=args.limit)
        if witness is None:
            reason = (
                "covering-pair obstruction"
                if covering_pair_obstruction(poly) is not None
                else "search exhausted: no realising order"
            )
            sys.stderr.write(dumps({"realisable": False, "reason": reason}) + "\n")
            return 1
        _emit(dumps(network_to_json(witness)))
        return 0
    if cmd == "verify":
        poly, _ = _load_poly(args)
        net = _load_network(args, attr="network")
        _emit(dumps({"realises": verify_realisation(poly, net)}))
        return 0
    if cmd in ("adjacency", "newton"):
        poly, _ = _load_poly(args)
        _check_budget(poly, args.max_terms)
        if args.debug_systems:
            build = wall_system if cmd == "adjacency" else newton_edge_system
            for i, a in enumerate(poly.support):
                for b in poly.support[i + 1:]:
                    sys.stderr.write(
                        f"# {sorted(a)} vs {sorted(b)}\n"
                        + system_to_text(build(poly, a, b))
                    )
        graph = adjacency_graph(poly) if cmd == "adjacency" else newton_skeleton(poly)
        _emit(graph_to_dot(graph) if args.dot else dumps(graph_to_json(graph)))
        return 0
    if cmd == "chamber":
        poly, net = _load_poly(args)
        costs = parse_cost_vector(args.costs, poly.n)
        _emit(dumps(chamber_payload(chamber_membership(poly, costs))))
        return 0
    if cmd == "whatif":
        poly, net = _load_poly(args)
        _check_budget(poly, args.max_terms)
        costs = parse_cost_vector(args.costs, poly.n)
        sign = 1 if args.direction == "up" else -1
        result = ray_trace(poly, costs, args.activity, sign)
        prediction = predict_transitions(
            poly, result.start_argmax[0], args.activity, sign
        )
        _emit(dumps(whatif_payload(result, prediction)))
        return 0
    if cmd == "gen-fnk":
        _emit(dumps(poly_to_json(gen_fnk(args.n, args.k))))
        return 0
    if cmd == "dual":
        poly, _ = _load_poly(args)
        _emit(dumps(poly_to_json(poly.dual())))
        return 0
    if cmd == "product":
        left = poly_from_json(_read_json(args.left))
        right = poly_from_json(_read_json(args.right))
        _emit(dumps(poly_to_json(product(left, right))))
        return 0
    if cmd == "serve":
        net = _load_network(args) if args.input else None
        service_mod.serve(
            args.port,
            network=net,
            max_chains=args.max_chains,
            max_terms=args.max_terms,
        )
        return 0
    raise BadParameters(f"unknown command {cmd!r}")


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _run(args)
    except (LimitExceeded, OnWall) as exc:
        sys.stderr.write(dumps(exc.to_json()) + "\n")
        return 1
    except InvalidInput as exc:
        sys.stderr.write(dumps(exc.to_json()) + "\n")
        return 2
    except ToolkitError as exc:
        sys.stderr.write(dumps(exc.to_json()) + "\n")
        return 1


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
