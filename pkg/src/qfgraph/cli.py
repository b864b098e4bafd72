"""Command-line front end.

JSON in, JSON out on stdout; human-readable notes go to stderr.  Exit codes:
0 success, 1 input error, 2 internal invariant violation (including failed
example reproductions and sweep counterexamples).

The input file format is a single object:

    {"rank": 3, "factors": [{"color": 1, "exponent": 1, "weight": 2}, ...]}
"""

from __future__ import annotations

import argparse
import json
import sys

from .decision import decide, is_prime, is_real
from .drinfeld import KRFactor, expand_all, q_factorize
from .dynkin import DynkinA, Interval
from .fixtures import EXAMPLE_NAMES, run_example
from .graph import QFactGraph, build_graph, classify
from .qchar import dominant_product_lweights, socle_head
from .redsets import r_set
from .sweeps import CHECKS


def load_input(path: str) -> tuple[DynkinA, list[KRFactor]]:
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON in {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError("input must be a JSON object")
    rank = data.get("rank")
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
        raise ValueError("'rank' must be a positive integer")
    raw = data.get("factors")
    if not isinstance(raw, list) or not raw:
        raise ValueError("'factors' must be a non-empty list")
    diagram = DynkinA(rank)
    factors = [KRFactor.from_json(item) for item in raw]
    for f in factors:
        diagram.check_node(f.color)
    return diagram, factors


def emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def build_from_path(path: str) -> QFactGraph:
    diagram, factors = load_input(path)
    g = build_graph(factors, diagram)
    if g.was_refactorized:
        print("note: input was only a pre-factorization; it has been "
              "re-factorized", file=sys.stderr)
    return g


def cmd_rset(args) -> int:
    diagram = DynkinA(args.rank)
    window = None
    if (args.jlo is None) != (args.jhi is None):
        raise ValueError("--jlo and --jhi must be given together")
    if args.jlo is not None:
        window = Interval(args.jlo, args.jhi)
    rs = r_set(diagram, args.i, args.r, args.j, args.s, window)
    print("{" + ", ".join(str(m) for m in rs.sorted()) + "}")
    return 0


def cmd_factorize(args) -> int:
    diagram, factors = load_input(args.input)
    output = q_factorize(expand_all(factors))
    refactorized = tuple(sorted(factors)) != output
    emit({"rank": diagram.n,
          "factors": [f.to_json() for f in output],
          "was_refactorized": refactorized})
    return 0


def cmd_graph(args) -> int:
    g = build_from_path(args.input)
    dot = g.to_dot()
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(dot)
        print(f"wrote {args.dot}", file=sys.stderr)
    else:
        sys.stdout.write(dot)
    return 0


def cmd_classify(args) -> int:
    g = build_from_path(args.input)
    shape = classify(g)
    emit({"tag": shape.tag,
          "components": [list(c) for c in shape.components],
          "line_order": list(shape.line_order) if shape.line_order else None,
          "was_refactorized": g.was_refactorized})
    return 0


def cmd_prime(args) -> int:
    g = build_from_path(args.input)
    verdict = decide(g)
    emit(verdict.to_json(trace=args.trace))
    print(f"primality: {verdict.primality}; reality: {verdict.reality}",
          file=sys.stderr)
    return 0


def cmd_real(args) -> int:
    g = build_from_path(args.input)
    verdict = is_real(g)
    verdict.primality = is_prime(g).primality
    emit(verdict.to_json(trace=args.trace))
    return 0


def cmd_qchar_product(args) -> int:
    diagram = DynkinA(args.rank)
    dominant = dominant_product_lweights(diagram, args.i, args.j, args.m)
    sh = socle_head(diagram, args.i, args.j, args.m)
    emit({"dominant": sorted((w.to_json() for w in dominant), key=str),
          "socle_head": sh.to_json()})
    return 0


def cmd_examples(args) -> int:
    report = run_example(args.name)
    for line in report.lines():
        print(line)
    if not report.all_passed():
        print("example reproduction failed", file=sys.stderr)
        return 2
    return 0


def cmd_sweep(args) -> int:
    try:
        check = CHECKS[args.check]
    except KeyError:
        raise ValueError(f"unknown check {args.check!r}; choose from "
                         f"{', '.join(sorted(CHECKS))}") from None
    kwargs = {}
    if args.check in ("forms-agree", "c3aline"):
        kwargs = {"max_rank": args.max_rank, "max_weight": args.max_weight}
    elif args.check == "dominant-pair":
        kwargs = {"max_rank": args.max_rank}
    elif args.check == "redsets-algebra":
        kwargs = {"max_rank": min(args.max_rank + 2, 8),
                  "max_weight": args.max_weight + 1}
    elif args.check in ("duality", "confluence"):
        kwargs = {"trials": args.trials, "seed": args.seed}
    result = check(**kwargs)
    for line in result.lines():
        print(line)
    return 0 if result.passed else 2


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfgraph",
        description="q-factorization graphs of Drinfeld polynomials in type A: "
                    "build graphs, decide primality and reality, emit certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rset", help="print a reducibility set")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--jlo", type=int, default=None,
                   help="window lower end (defaults to the whole diagram)")
    p.add_argument("--jhi", type=int, default=None, help="window upper end")
    p.set_defaults(func=cmd_rset)

    p = sub.add_parser("factorize", help="q-factorize the product of the input factors")
    p.add_argument("input")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("graph", help="emit the graph in DOT format")
    p.add_argument("input")
    p.add_argument("--dot", default=None, help="write DOT here instead of stdout")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("classify", help="shape tag of the graph")
    p.add_argument("input")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("prime", help="primality verdict with certificate")
    p.add_argument("input")
    p.add_argument("--trace", action="store_true", help="include the certificate")
    p.set_defaults(func=cmd_prime)

    p = sub.add_parser("real", help="reality verdict")
    p.add_argument("input")
    p.add_argument("--trace", action="store_true", help="include the certificate")
    p.set_defaults(func=cmd_real)

    p = sub.add_parser("qchar-product",
                       help="dominant l-weights and socle/head of a product "
                            "of two fundamental modules")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_qchar_product)

    p = sub.add_parser("examples", help="re-verify a built-in example family")
    p.add_argument("name", help=f"one of: {', '.join(EXAMPLE_NAMES)}")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("sweep", help="run an exhaustive or randomized property sweep")
    p.add_argument("--check", required=True,
                   help=f"one of: {', '.join(sorted(CHECKS))}")
    p.add_argument("--max-rank", type=int, default=6)
    p.add_argument("--max-weight", type=int, default=4)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=2024)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
