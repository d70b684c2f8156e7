"""Command-line front end.

Subcommands print one JSON document on stdout. Exit codes: 0 success, 1 a
check came out negative (not equal, audit violations, or not e-positive
under --require-positive), 2 usage error, 3 resource cap hit, 4 internal
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formulas, oracle
from .algebra import ESym
from .errors import ResourceLimitError
from .foresttriples import (
    count_forest_triples,
    csf_forest_triples,
    csf_i,
    enumerate_forest_triples,
    ft_prime_members,
)
from .graph import (
    LabeledGraph,
    chain_graph,
    clique_graph,
    cycle_graph,
    enumerate_nbc_forests,
    parse_chain,
    parse_graph_text,
    path_graph,
    star_graph,
)
from .involutions import (
    audit_involution,
    composed_host,
    composed_involution,
    cycle_involution_map,
    cycle_tree_involution_map,
    matching_involution,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE, EXIT_INTERNAL = 0, 1, 2, 3, 4

DEFAULT_MAX_N = 12
DEFAULT_MAX_TRIPLES = 2_000_000


class UsageError(Exception):
    pass


def _add_graph_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--graph", metavar="FILE", help="graph text file ('n <count>' then 'e <u> <v>' lines)")
    src.add_argument("--chain", metavar="SPEC", help="cycle/clique chain such as C4+C3+K5")
    src.add_argument("--cycle", type=int, metavar="A", help="cycle C_A")
    src.add_argument("--clique", type=int, metavar="K", help="clique K_K")
    src.add_argument("--path", type=int, metavar="K", help="path P_K")


def _add_caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="largest vertex count accepted")
    p.add_argument("--max-triples", type=int, default=DEFAULT_MAX_TRIPLES, help="cap on enumerated forest triples")
    p.add_argument("--threads", type=int, default=1, help="worker processes for the brute-force oracle")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromsym", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="e-expansion of X_G (or X^(i)_G) from forest triples")
    _add_graph_source(p)
    p.add_argument("--refinement", type=int, metavar="I", help="compute X^(I) instead of X_G")
    p.add_argument("--method", choices=["factored", "enumerate"], default="factored")
    p.add_argument("--pretty", action="store_true", help="print the expansion as text instead of JSON")
    p.add_argument("--require-positive", action="store_true", help="exit 1 unless e-positive")
    _add_caps(p)

    p = sub.add_parser("formula", help="evaluate a closed formula")
    f = p.add_mutually_exclusive_group(required=True)
    f.add_argument("--cycle", type=int, metavar="A")
    f.add_argument("--cycle-i", type=int, nargs=2, metavar=("A", "I"))
    f.add_argument("--b", type=int, nargs=2, metavar=("A", "K"))
    f.add_argument("--b-i", type=int, nargs=3, metavar=("A", "K", "I"))
    f.add_argument("--two-cycles", type=int, nargs=2, metavar=("A", "B"))
    f.add_argument("--chain", metavar="SPEC")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--require-positive", action="store_true")

    p = sub.add_parser("verify", help="compare an expansion with the proper-colouring oracle")
    _add_graph_source(p)
    p.add_argument(
        "--against",
        default="forest-triples",
        help="forest-triples, or formula:cycle, formula:two-cycles, formula:chain",
    )
    p.add_argument("--oracle", choices=["stable", "brute"], default="stable")
    _add_caps(p)

    p = sub.add_parser("audit", help="audit an involution on its whole domain")
    a = p.add_mutually_exclusive_group(required=True)
    a.add_argument("--cycle", type=int, metavar="A", help="cycle involution on FT(C_A)")
    a.add_argument("--cycle-tree", type=int, nargs=2, metavar=("A", "K"), help="involution on FT'(C_A+U_K)")
    a.add_argument("--composed", type=int, metavar="A", help="lifted involution on FT(C_A+G'), G' from --onto")
    p.add_argument("--tree", choices=["path", "star"], default="path", help="shape of U_K")
    p.add_argument("--onto", metavar="SPEC", help="chain spec of G' for --composed; a single cycle uses its own involution")
    p.add_argument("--limit", type=int, default=20, help="violations listed in the report")
    _add_caps(p)

    p = sub.add_parser("enumerate", help="count NBC forests and forest triples")
    _add_graph_source(p)
    p.add_argument("--list", action="store_true", help="also list every forest triple")
    _add_caps(p)
    return parser


def _load_graph(args) -> LabeledGraph:
    try:
        if args.graph is not None:
            g = parse_graph_text(Path(args.graph).read_text())
        elif args.chain is not None:
            g = chain_graph(args.chain)
        elif args.cycle is not None:
            g = cycle_graph(args.cycle)
        elif args.clique is not None:
            g = clique_graph(args.clique)
        else:
            g = path_graph(args.path)
    except (ValueError, OSError) as exc:
        raise UsageError(str(exc)) from None
    if g.n > args.max_n:
        raise ResourceLimitError(f"graph has {g.n} vertices, --max-n is {args.max_n}")
    return g


def _expansion_doc(x: ESym, degree: int) -> dict:
    return {"degree": degree, "terms": x.to_json_terms(), "e_positive": not x.negative_terms()}


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc) + "\n")


def _emit_expansion(x: ESym, degree: int, pretty: bool) -> None:
    if pretty:
        sys.stdout.write(x.pretty() + "\n")
    else:
        _emit(_expansion_doc(x, degree))


def _cmd_compute(args) -> int:
    g = _load_graph(args)
    if args.method == "enumerate" and count_forest_triples(g) > args.max_triples:
        raise ResourceLimitError(f"{g} has more than {args.max_triples} forest triples")
    if args.refinement is not None:
        try:
            x = csf_i(g, args.refinement, args.method)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        degree = g.n - args.refinement
    else:
        x = csf_forest_triples(g, args.method)
        degree = g.n
    _emit_expansion(x, degree, args.pretty)
    return EXIT_FAIL if args.require_positive and x.negative_terms() else EXIT_OK


def _cmd_formula(args) -> int:
    try:
        if args.cycle is not None:
            x, degree = formulas.cycle_csf(args.cycle), args.cycle
        elif args.cycle_i is not None:
            a, i = args.cycle_i
            x, degree = formulas.cycle_csf_i(a, i), a - i
        elif args.b is not None:
            a, k = args.b
            x, degree = formulas.b_formula(a, k), a + k - 1
        elif args.b_i is not None:
            a, k, i = args.b_i
            x, degree = formulas.b_i_formula(a, k, i), a + k - 1 - i
        elif args.two_cycles is not None:
            a, b = args.two_cycles
            x, degree = formulas.two_cycle_csf(a, b), a + b - 1
        else:
            spec = formulas.ChainSpec.parse(args.chain)
            x, degree = formulas.chain_csf(spec), spec.n
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit_expansion(x, degree, args.pretty)
    return EXIT_FAIL if args.require_positive and x.negative_terms() else EXIT_OK


def _formula_for(name: str, args, g: LabeledGraph) -> ESym:
    if name == "cycle":
        if args.cycle is None:
            raise UsageError("formula:cycle needs --cycle")
        return formulas.cycle_csf(args.cycle)
    if name in ("two-cycles", "chain"):
        if args.chain is None and args.cycle is None:
            raise UsageError(f"formula:{name} needs --chain")
        spec = parse_chain(args.chain) if args.chain is not None else [("cycle", args.cycle)]
        if name == "two-cycles":
            if len(spec) != 2 or any(kind != "cycle" for kind, _ in spec):
                raise UsageError("formula:two-cycles needs a chain of exactly two cycles")
            return formulas.two_cycle_csf(spec[0][1], spec[1][1])
        return formulas.chain_csf(spec)
    raise UsageError(f"unknown formula {name!r}")


def _cmd_verify(args) -> int:
    g = _load_graph(args)
    against = args.against
    if against == "forest-triples":
        x = csf_forest_triples(g)
    elif against.startswith("formula:"):
        x = _formula_for(against.split(":", 1)[1], args, g)
    else:
        raise UsageError(f"unknown --against value {against!r}")
    if args.oracle == "brute":
        truth = oracle.csf_coloring_oracle(g, cap=min(args.max_n, oracle.DEFAULT_BRUTE_CAP), workers=args.threads)
    else:
        truth = oracle.csf_stable_partitions(g, cap=min(args.max_n, oracle.DEFAULT_STABLE_CAP))
    try:
        mine = oracle.e_to_monomial(x, g.n)
    except ValueError:
        mine = None
    equal = mine == truth
    _emit({"equal": equal})
    return EXIT_OK if equal else EXIT_FAIL


def _tree(shape: str, k: int) -> LabeledGraph:
    return star_graph(k) if shape == "star" else path_graph(k)


def _cmd_audit(args) -> int:
    if args.cycle is not None:
        if args.cycle < 2:
            raise UsageError("cycle needs at least 2 vertices")
        host = cycle_graph(args.cycle)
        domain_iter, phi = None, cycle_involution_map(args.cycle)
    elif args.cycle_tree is not None:
        a, k = args.cycle_tree
        if a < 2 or k < 1:
            raise UsageError("need A >= 2 and K >= 1")
        host = None
        domain_iter = ft_prime_members(a, _tree(args.tree, k))
        phi = cycle_tree_involution_map(a, k)
    else:
        a = args.composed
        if a < 2 or args.onto is None:
            raise UsageError("--composed needs A >= 2 and --onto SPEC")
        try:
            spec = parse_chain(args.onto)
            g_prime = chain_graph(spec)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if len(spec) == 1 and spec[0][0] == "cycle":
            inner = cycle_involution_map(spec[0][1])
        else:
            try:
                inner = matching_involution(enumerate_forest_triples(g_prime, args.max_triples))
            except ValueError as exc:
                _emit({"error": f"no first-preserving involution found on FT({args.onto}): {exc}"})
                return EXIT_FAIL
        host = composed_host(a, g_prime)
        domain_iter, phi = None, composed_involution(a, inner)
    if host is not None:
        if host.n > args.max_n:
            raise ResourceLimitError(f"graph has {host.n} vertices, --max-n is {args.max_n}")
        domain_iter = enumerate_forest_triples(host, args.max_triples)
    report = audit_involution(domain_iter, phi)
    _emit(report.to_json(args.limit))
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_enumerate(args) -> int:
    g = _load_graph(args)
    doc = {
        "vertices": g.n,
        "edges": g.num_edges,
        "nbc_forests": sum(1 for _ in enumerate_nbc_forests(g)),
        "forest_triples": count_forest_triples(g),
    }
    if args.list:
        doc["triples"] = [str(F) for F in enumerate_forest_triples(g, args.max_triples)]
    _emit(doc)
    return EXIT_OK


COMMANDS = {
    "compute": _cmd_compute,
    "formula": _cmd_formula,
    "verify": _cmd_verify,
    "audit": _cmd_audit,
    "enumerate": _cmd_enumerate,
}


def parse_args(argv=None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def run(args: argparse.Namespace) -> int:
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"chromsym: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"chromsym: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except Exception as exc:  # anything else is a bug, reported with its own exit code
        print(f"chromsym: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main(argv=None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
