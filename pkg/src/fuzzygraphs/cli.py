"""Command-line interface.

Exit codes are uniform across subcommands: 0 for success (or a true
predicate), 1 for a false predicate or a found counterexample / violation,
2 for usage and input errors.
"""

import argparse
import sys
from fractions import Fraction

from .audit import (
    CLAIMS,
    PROPERTIES,
    check_property,
    default_profile,
    save_record,
    search_counterexample,
)
from .balance import balance_check, star_density
from .errors import FuzzyGraphError
from .generators import generate
from .graph import classify, complement
from .graphio import load_graph, save_graph
from .iso import find_isomorphism
from .ops import OP_KINDS, combine
from .values import parse_value_text, value_text

_GEN_FAMILIES = {
    "kn": "complete_kn",
    "cn": "cycle_strong",
    "petersen": "petersen_strong",
    "knn": "complete_bipartite_strong",
    "path": "path_strong",
    "edgeless": "edgeless",
}

_METHODS = {"enum": "enumeration", "flow": "flow"}


def _fraction_arg(text: str) -> Fraction:
    try:
        return parse_value_text(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _density_line(value: Fraction) -> str:
    return f"{value_text(value)} ({float(value):.6g})"


def _cmd_validate(args) -> int:
    try:
        g = load_graph(args.file)
    except FuzzyGraphError as exc:
        print(f"invalid: {exc}")
        return 1
    print(f"valid fuzzy graph: {len(g.sigma)} vertices, {len(g.mu)} edges")
    return 0


def _cmd_density(args) -> int:
    g = load_graph(args.file)
    density = star_density(g)
    print(f"D* = {_density_line(density.value)}")
    return 0


def _cmd_balance(args) -> int:
    g = load_graph(args.file)
    verdict = balance_check(g, _METHODS[args.method])
    print(f"balanced: {'yes' if verdict.balanced else 'no'}")
    print(f"graph density: {_density_line(verdict.graph_density.value)}")
    print(f"max subgraph density: {_density_line(verdict.max_subgraph_density.value)}")
    if args.witness and verdict.witness is not None:
        print("witness: " + " ".join(verdict.witness))
    return 0 if verdict.balanced else 1


def _cmd_complement(args) -> int:
    save_graph(args.output, complement(load_graph(args.file)))
    return 0


def _cmd_op(args) -> int:
    result = combine(args.kind, load_graph(args.g1), load_graph(args.g2))
    save_graph(args.output, result)
    print(f"{args.kind}: {len(result.sigma)} vertices, {len(result.mu)} edges")
    return 0


def _cmd_iso(args) -> int:
    morphism = find_isomorphism(load_graph(args.g1), load_graph(args.g2))
    if morphism is None:
        print("not isomorphic")
        return 1
    for source in sorted(morphism.mapping):
        print(f"{source} -> {morphism.mapping[source]}")
    return 0


def _cmd_classify(args) -> int:
    rep = classify(load_graph(args.file))
    print(f"complete: {'yes' if rep.is_complete else 'no'}")
    print(f"strong: {'yes' if rep.is_strong else 'no'}")
    print(
        "regular: "
        + (f"yes, degree {value_text(rep.regular_degree)}" if rep.regular_degree is not None else "no")
    )
    print(
        "totally regular: "
        + (
            f"yes, total degree {value_text(rep.totally_regular_degree)}"
            if rep.totally_regular_degree is not None
            else "no"
        )
    )
    print(
        "constant sigma: "
        + (value_text(rep.constant_sigma) if rep.constant_sigma is not None else "no")
    )
    print("constant mu: " + (value_text(rep.constant_mu) if rep.constant_mu is not None else "no"))
    return 0


def _cmd_gen(args) -> int:
    g = generate(_GEN_FAMILIES[args.family], n=args.n, c=args.c)
    save_graph(args.output, g)
    print(f"{args.family}: {len(g.sigma)} vertices, {len(g.mu)} edges")
    return 0


def _cmd_audit(args) -> int:
    if args.property == "all":
        property_ids = list(PROPERTIES)
    elif args.property in PROPERTIES:
        property_ids = [args.property]
    else:
        print(f"unknown property {args.property!r}", file=sys.stderr)
        return 2

    total_violations = 0
    for pid in property_ids:
        if PROPERTIES[pid].kind is None:
            profile = None
        else:
            profile = default_profile(pid, args.max_vertices, args.grid)
        report = check_property(pid, samples=args.samples, seed=args.seed, profile=profile)
        total_violations += report.violations
        note = f", discarded {report.discarded}" if report.discarded else ""
        print(f"{pid}: {report.samples_run} runs, {report.violations} violations{note}")
        if report.first_violation is not None and args.out:
            path = save_record(report.first_violation, args.out)
            print(f"  first violation written to {path}")
    return 1 if total_violations else 0


def _cmd_search(args) -> int:
    if args.claim not in CLAIMS:
        print(f"unknown claim {args.claim!r}", file=sys.stderr)
        return 2
    record = search_counterexample(args.claim, budget=args.budget, seed=args.seed)
    if record is None:
        print(f"{args.claim}: not found within budget {args.budget}")
        return 0
    print(f"{args.claim}: counterexample found ({len(record.graphs)} graph(s))")
    for name in sorted(record.measured):
        print(f"  {name} = {value_text(record.measured[name])}")
    if args.out:
        path = save_record(record, args.out)
        print(f"  record written to {path}")
    return 1


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzygraph",
        description="Exact fuzzy-graph density, balance, products, and theorem audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a graph file against all build rules")
    p.add_argument("file")
    p.set_defaults(run=_cmd_validate)

    p = sub.add_parser("density", help="print the graph's density")
    p.add_argument("file")
    p.set_defaults(run=_cmd_density)

    p = sub.add_parser("balance", help="decide balancedness")
    p.add_argument("file")
    p.add_argument("--method", choices=sorted(_METHODS), default="enum")
    p.add_argument("--witness", action="store_true", help="print a denser subset when unbalanced")
    p.set_defaults(run=_cmd_balance)

    p = sub.add_parser("complement", help="write the complement graph")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(run=_cmd_complement)

    p = sub.add_parser("op", help="combine two graphs")
    p.add_argument("kind", choices=OP_KINDS)
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(run=_cmd_op)

    p = sub.add_parser("iso", help="search for an isomorphism between two graphs")
    p.add_argument("g1")
    p.add_argument("g2")
    p.set_defaults(run=_cmd_iso)

    p = sub.add_parser("classify", help="complete/strong/regular/constant report")
    p.add_argument("file")
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("gen", help="generate a named family graph")
    p.add_argument("family", choices=sorted(_GEN_FAMILIES))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--c", type=_fraction_arg, required=True, metavar="P/Q")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(run=_cmd_gen)

    p = sub.add_parser("audit", help="run property audits")
    p.add_argument("--property", default="all")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=None)
    p.add_argument("--grid", type=int, default=16)
    p.add_argument("--out", default=None, help="directory for violation records")
    p.set_defaults(run=_cmd_audit)

    p = sub.add_parser("search", help="search for a counterexample to a negative claim")
    p.add_argument("claim")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="directory for the found record")
    p.set_defaults(run=_cmd_search)

    return parser


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.run(args)
    except FuzzyGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
