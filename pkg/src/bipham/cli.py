"""Command-line interface.

Subcommands: ``check`` (full report on one graph file), ``gen`` (write an
example-family graph), ``verify`` (theorem verdict over an exhaustive or
sampled population), ``enumerate`` (stream all small graphs through a
filter), ``dot`` (Graphviz export).

Exit codes: 0 success, 1 a verification found counterexamples, 2 input
error, 3 a resource or sampling budget was exhausted.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .core import parse_graph, serialize_graph
from .errors import ContractViolationError, GraphParseError, ResourceLimitError
from .exemplars import FAMILY_NAMES, FamilySpec, generate
from .harness import (
    ENUMERATION_CONSTRAINTS,
    SAMPLE_CONSTRAINTS,
    ExhaustivePopulation,
    SampleConfig,
    SampledPopulation,
    THEOREMS,
    dump_json,
    enumerate_all,
    export_dot,
    run_check,
    verify_theorem,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_LIMIT = 3


def _read_graph(path: str):
    if path == "-":
        return parse_graph(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise ContractViolationError(f"cannot read {path}: {exc.strerror}") from None


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _parse_sample_spec(spec: str) -> dict:
    """Parse ``a=4,p=0.5,seed=7,count=100`` into keyword arguments."""
    fields = {}
    for chunk in spec.split(","):
        if "=" not in chunk:
            raise ContractViolationError(f"bad sample field {chunk!r}, expected key=value")
        key, value = chunk.split("=", 1)
        fields[key.strip()] = value.strip()
    expected = {"a", "p", "seed", "count"}
    if set(fields) != expected:
        raise ContractViolationError(
            f"sample spec needs exactly the keys {sorted(expected)}, got {sorted(fields)}"
        )
    try:
        return {
            "a": int(fields["a"]),
            "arc_probability": float(fields["p"]),
            "seed": int(fields["seed"]),
            "count": int(fields["count"]),
        }
    except ValueError as exc:
        raise ContractViolationError(f"bad sample spec: {exc}") from None


def _parse_constraints(text: Optional[str], allowed) -> Optional[frozenset]:
    if text is None:
        return None
    names = [t.strip() for t in text.split(",") if t.strip()]
    unknown = [n for n in names if n not in allowed]
    if unknown:
        raise ContractViolationError(f"unknown constraints {unknown}; allowed: {list(allowed)}")
    return frozenset(names)


def cmd_check(args) -> int:
    g = _read_graph(args.file)
    report = run_check(g)
    if args.json is not None:
        _write_output(report.to_json(), args.json)
    sys.stdout.write(report.to_text())
    return EXIT_OK


def cmd_gen(args) -> int:
    params = {}
    if args.a is not None:
        params["a"] = args.a
    if args.size_a is not None:
        params["size_a"] = args.size_a
    g = generate(FamilySpec.make(args.family, **params))
    _write_output(serialize_graph(g), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if (args.exhaustive_a is None) == (args.sample is None):
        raise ContractViolationError("choose exactly one of --exhaustive-a and --sample")
    if args.exhaustive_a is not None:
        constraints = _parse_constraints(args.constraints, ENUMERATION_CONSTRAINTS)
        population = ExhaustivePopulation(
            args.exhaustive_a, constraints if constraints is not None else frozenset()
        )
    else:
        constraints = _parse_constraints(args.constraints, SAMPLE_CONSTRAINTS)
        fields = _parse_sample_spec(args.sample)
        if constraints is None:
            constraints = THEOREMS[args.theorem].sample_constraints
        population = SampledPopulation(SampleConfig(constraints=constraints, **fields))
    verdict = verify_theorem(
        args.theorem, population, min_order=args.min_order, workers=args.workers
    )
    if args.json is not None:
        _write_output(dump_json(verdict.to_json_dict()), args.json)
    sys.stdout.write(verdict.summary() + "\n")
    if verdict.counterexamples:
        return EXIT_COUNTEREXAMPLE
    if verdict.inconclusive:
        return EXIT_RESOURCE_LIMIT
    return EXIT_OK


def cmd_enumerate(args) -> int:
    constraints = _parse_constraints(args.filter, ENUMERATION_CONSTRAINTS) or frozenset()
    stream = enumerate_all(args.a, constraints, dedupe=args.dedupe)
    if args.count_only:
        total = sum(1 for _ in stream)
        sys.stdout.write(f"{total}\n")
        return EXIT_OK
    first = True
    for g in stream:
        if not first:
            sys.stdout.write("\n")
        sys.stdout.write(serialize_graph(g))
        first = False
    return EXIT_OK


def cmd_dot(args) -> int:
    g = _read_graph(args.file)
    _write_output(export_dot(g), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bipham",
        description="Degree conditions, cycle structure and hamiltonicity checks "
        "for balanced bipartite digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="full property report for a graph file")
    p_check.add_argument("file", help="graph file in bbd format ('-' for stdin)")
    p_check.add_argument("--json", metavar="PATH", help="also write a JSON report")
    p_check.set_defaults(func=cmd_check)

    p_gen = sub.add_parser("gen", help="generate a graph from a named family")
    p_gen.add_argument("family", choices=FAMILY_NAMES)
    p_gen.add_argument("--a", type=int, help="half-order for parametric families")
    p_gen.add_argument("--size-a", type=int, dest="size_a", help="size of the first block (ex4)")
    p_gen.add_argument("-o", "--output", metavar="PATH", help="output file (default stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_verify = sub.add_parser("verify", help="check a theorem over a graph population")
    p_verify.add_argument("theorem", choices=sorted(THEOREMS))
    p_verify.add_argument("--exhaustive-a", type=int, metavar="A",
                          help="check every graph of half-order A (A <= 3)")
    p_verify.add_argument("--sample", metavar="a=4,p=0.5,seed=7,count=100",
                          help="check a seeded random sample")
    p_verify.add_argument("--constraints", metavar="NAMES",
                          help="comma-separated sampling constraints "
                          f"(default: the theorem's hypothesis; from {', '.join(SAMPLE_CONSTRAINTS)})")
    p_verify.add_argument("--min-order", type=int, dest="min_order",
                          help="override the theorem's minimum order 2a")
    p_verify.add_argument("--workers", type=int, default=1, help="parallel worker processes")
    p_verify.add_argument("--json", metavar="PATH", help="write the verdict as JSON")
    p_verify.set_defaults(func=cmd_verify)

    p_enum = sub.add_parser("enumerate", help="stream every small graph through a filter")
    p_enum.add_argument("--a", type=int, required=True, help="half-order (<= 3)")
    p_enum.add_argument("--filter", metavar="NAMES",
                        help=f"comma-separated from: {', '.join(ENUMERATION_CONSTRAINTS)}")
    p_enum.add_argument("--dedupe", action="store_true",
                        help="one representative per isomorphism class")
    p_enum.add_argument("--count-only", action="store_true", dest="count_only")
    p_enum.set_defaults(func=cmd_enumerate)

    p_dot = sub.add_parser("dot", help="export a graph file as Graphviz dot")
    p_dot.add_argument("file", help="graph file in bbd format ('-' for stdin)")
    p_dot.add_argument("-o", "--output", metavar="PATH", help="output file (default stdout)")
    p_dot.set_defaults(func=cmd_dot)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphParseError, ContractViolationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_LIMIT


if __name__ == "__main__":
    raise SystemExit(main())
