"""Command-line interface.

Subcommands: rank, stress, verify, generate, reduce, certify, selfcheck,
export. Graphs come from an edge-list file or from a generator family.
Reports stream as JSON lines on stdout by default; CSV and plain text are
available via --format, and --output redirects the delimited output to a
file. Diagnostics go to stderr. Exit status is 0 on success, 1 on a bound
violation or oracle mismatch, 2 on unusable input.

Identical commands with identical seeds produce byte-identical output;
wall-clock fields are zeroed unless --timings is given.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, reductions
from .graph import (
    EdgeListError,
    GenerationError,
    Graph,
    format_edge_list,
    generate_clique_chain,
    generate_complete,
    generate_random_regular,
    read_edge_list,
    to_dot,
)
from .pebble import OracleMismatchError, pebble_rank
from .reductions import CertificationError, SplitGateError
from .rigidity import generic_rank, sample_generic_realization

USAGE_ERROR = 2
CHECK_FAILED = 1


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="edge-list file (omit when using --family)")
    p.add_argument(
        "--family",
        choices=["complete", "k5chain", "k6chain", "random-regular"],
        help="generate the input graph instead of reading a file",
    )
    p.add_argument("--size", type=int, help="vertex count for generated graphs")
    p.add_argument("--degree", type=int, help="degree for random-regular")
    p.add_argument("--count", type=int, help="copies k for clique chains")
    p.add_argument("--seed", type=int, default=0)


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.family:
        if args.family == "complete":
            if args.size is None:
                raise ValueError("--family complete needs --size")
            return generate_complete(args.size)
        if args.family in ("k5chain", "k6chain"):
            if args.count is None:
                raise ValueError(f"--family {args.family} needs --count (number of copies)")
            return generate_clique_chain(5 if args.family == "k5chain" else 6, args.count)
        if args.size is None or args.degree is None:
            raise ValueError("--family random-regular needs --size and --degree")
        return generate_random_regular(args.size, args.degree, args.seed)
    if not args.input:
        raise ValueError("provide an edge-list file or --family")
    return read_edge_list(args.input)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {output}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def _cmd_rank(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    mode = "rational" if args.rational else "field"
    comb = pebble_rank(g)
    lin = generic_rank(g, trials=args.trials, seed=args.seed, mode=mode)
    agree = comb == lin
    if args.format == "json":
        payload = {
            "vertex_count": g.vertex_count,
            "edge_count": g.edge_count,
            "rank": comb,
            "stress": g.edge_count - comb,
            "pebble_rank": comb,
            "matrix_rank": lin,
            "oracle_agreement": agree,
        }
        print(json.dumps(payload, sort_keys=True))
    elif args.command == "rank":
        print(comb)
    else:
        print(g.edge_count - comb)
    if not agree:
        print(f"oracle mismatch: pebble={comb} matrix={lin}", file=sys.stderr)
        return CHECK_FAILED
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.theorem is None and args.lemma is None:
        raise ValueError("verify needs --theorem {1,2} or --lemma {4,5}")
    if args.family and args.input is None and args.batch_count:
        reports = bounds.batch_verify(
            args.family,
            args.batch_count,
            seed=args.seed,
            degree=args.degree,
            size_min=args.size_min,
            size_max=args.size_max,
            trials=args.trials,
        )
    else:
        g = _load_graph(args)
        if args.lemma is not None:
            reports = [
                bounds.verify_lemma_bound(g, args.lemma, trials=args.trials, seed=args.seed)
            ]
        elif args.theorem == 1:
            reports = [bounds.verify_theorem1(g, trials=args.trials, seed=args.seed)]
        else:
            reports = [bounds.verify_theorem2(g, trials=args.trials, seed=args.seed)]
    printable = reports if args.timings else bounds.strip_runtimes(reports)
    if args.format == "csv":
        _emit(bounds.reports_to_csv(printable), args.output)
    elif args.format == "text":
        lines = []
        for r in printable:
            verdict = "ok" if r.satisfied and r.oracle_agreement else "FAIL"
            target = r.theorem_bound if r.theorem_bound is not None else r.stress_cap
            lines.append(
                f"{r.graph_id}: n={r.vertex_count} m={r.edge_count} rank={r.rank} "
                f"stress={r.stress} bound={target} {verdict}"
            )
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(bounds.reports_to_jsonl(printable), args.output)
    if args.plot:
        from .figures import plot_reports

        plot_reports(reports, args.plot)
        print(f"wrote {args.plot}", file=sys.stderr)
    bad = [r for r in reports if not (r.satisfied and r.oracle_agreement)]
    if bad:
        for r in bad:
            print(f"violation: {r.graph_id}", file=sys.stderr)
        return CHECK_FAILED
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    if not args.family:
        raise ValueError("generate needs --family")
    g = _load_graph(args)
    sys.stdout.write(format_edge_list(g))
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    final, trace = reductions.simplify(g)
    payload = trace.to_json_dict()
    payload["final_edge_count"] = final.edge_count
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.output)
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    max_degree = args.max_degree
    if max_degree is None:
        degs = g.degrees()
        max_degree = max(degs) if degs else 4
    trace, cap = reductions.certify_stress_bound(
        g, max_degree, trials=args.trials, seed=args.seed
    )
    acc = trace.accumulated
    payload = {
        "max_degree": max_degree,
        "stress_cap": str(cap),
        "steps": len(trace.steps),
        "accumulated": {"kind": acc.kind, "offset": acc.offset},
        "trace": trace.to_json_dict(),
        "verified": True,
    }
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.output)
    return 0


def _cmd_selfcheck(args: argparse.Namespace) -> int:
    results = bounds.oracle_agreement_sweep(args.count, seed=args.seed)
    for row in results:
        print(json.dumps(row, sort_keys=True))
    mismatches = [r for r in results if not r["agreement"]]
    print(
        f"{len(results) - len(mismatches)}/{len(results)} graphs agree",
        file=sys.stderr,
    )
    return CHECK_FAILED if mismatches else 0


def _cmd_export(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    if args.format == "dot":
        _emit(to_dot(g), args.output)
        return 0
    if not args.output:
        raise ValueError("--format svg needs --output")
    from .figures import draw_realization

    r = sample_generic_realization(g, args.seed, mode="rational")
    draw_realization(g, r, args.output)
    print(f"wrote {args.output}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genrig",
        description="Exact 2D rigidity ranks, stresses, reductions, and bound checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("rank", "print the generic rigidity rank"),
        ("stress", "print the generic stress count"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_input_args(p)
        p.add_argument("--trials", type=int, default=3)
        p.add_argument("--rational", action="store_true", help="use exact rational sampling")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("verify", help="check rank or stress bounds")
    _add_input_args(p)
    p.add_argument("--theorem", type=int, choices=[1, 2])
    p.add_argument("--lemma", type=int, choices=[4, 5])
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--format", choices=["jsonl", "csv", "text"], default="jsonl")
    p.add_argument("--output", help="write the report stream to a file")
    p.add_argument("--plot", help="also render a figure next to the report")
    p.add_argument("--timings", action="store_true", help="keep wall-clock fields")
    p.add_argument(
        "--batch-count",
        type=int,
        help="with --family: verify this many generated graphs",
    )
    p.add_argument("--size-min", type=int)
    p.add_argument("--size-max", type=int)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("generate", help="write a family graph as an edge list")
    _add_input_args(p)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("reduce", help="apply stress-preserving reductions")
    _add_input_args(p)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("certify", help="certify the stress cap by reduction")
    _add_input_args(p)
    p.add_argument("--max-degree", type=int, choices=[4, 5])
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("selfcheck", help="run the oracle agreement sweep")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_selfcheck)

    p = sub.add_parser("export", help="write DOT text or an SVG drawing")
    _add_input_args(p)
    p.add_argument("--format", choices=["dot", "svg"], default="dot")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EdgeListError, GenerationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (OracleMismatchError, SplitGateError, CertificationError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
