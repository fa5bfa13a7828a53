"""Batch command line: rank, discrepancy, cop, advise.

Text output rounds to 3 decimals for reading; JSON output carries full
precision and always has the interchange bundle shape, so it is stable and
machine-diffable.  Exit codes: 0 success (for ``cop``: both safety
conditions hold), 1 parse/validation failure, 2 solver failure, 3 direct
POP/POIP violation found, 4 no direct violation but the safety conditions
do not hold.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import ConvergenceError, MatrixError
from .matrix import PCMatrix, parse_matrix
from .ranking import DEFAULT_MAX_ITER, DEFAULT_TOL
from .revision import AnalysisBundle, analyze, open_session, suggest_from_bundle
from .schema import bundle_to_dict, step_to_dict

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_SOLVER_FAILURE = 2
EXIT_COP_VIOLATION = 3
EXIT_COP_UNSAFE = 4


class _Parser(argparse.ArgumentParser):
    # usage problems are validation failures, not solver failures: exit 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID_INPUT)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coprank",
                     description="Rankings, discrepancy and order-preservation "
                                 "checks for pairwise-comparison matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", "-i", required=True,
                       help="matrix file, or - for stdin")
        p.add_argument("--format", choices=["auto", "csv", "json"], default="auto")
        p.add_argument("--output", "-o", choices=["text", "json"], default="text")
        p.add_argument("--tol", type=float, default=DEFAULT_TOL)
        p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
        p.add_argument("--method", choices=["eigenvector", "geometric_mean"],
                       default="eigenvector")

    common(sub.add_parser("rank", help="priority weights, eigenvalue, inconsistency index"))
    common(sub.add_parser("discrepancy", help="local discrepancy matrix and its maximum"))
    common(sub.add_parser("cop", help="POP/POIP violations and safety verdicts"))
    advise = sub.add_parser("advise", help="suggest the next revision, or apply revisions")
    common(advise)
    advise.add_argument("--step", action="append", default=[], metavar="I,J=V",
                        help="revision to apply, e.g. 3,4=3 (repeatable, applied in order)")
    return parser


def _load_matrix(args) -> PCMatrix:
    if args.input == "-":
        text = sys.stdin.read()
        source = None
    else:
        path = Path(args.input)
        try:
            text = path.read_text()
        except OSError as exc:
            raise MatrixError(f"cannot read {args.input}: {exc.strerror or exc}")
        source = path
    fmt = args.format
    if fmt == "auto":
        if source is not None and source.suffix.lower() == ".json":
            fmt = "json"
        elif source is not None and source.suffix.lower() == ".csv":
            fmt = "csv"
        else:
            fmt = "json" if text.lstrip().startswith("{") else "csv"
    return parse_matrix(text, fmt)


def _parse_step(text: str) -> tuple[int, int, float]:
    try:
        coords, _, value_s = text.partition("=")
        i_s, j_s = coords.split(",")
        i, j = int(i_s), int(j_s)
        value = float(value_s)
    except ValueError:
        raise MatrixError(f"bad step {text!r}, expected I,J=V like 3,4=3") from None
    return i, j, value


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def _print_ranking(bundle: AnalysisBundle) -> None:
    labels = bundle.matrix.labels
    width = max(6, *(len(s) for s in labels))
    print("labels:  " + "  ".join(f"{s:>{width}}" for s in labels))
    print("weights: " + "  ".join(f"{_fmt(w):>{width}}" for w in bundle.ranking.weights))
    print(f"method: {bundle.ranking.method}")
    print(f"lambda_max: {_fmt(bundle.eigen.lambda_max)}")
    print(f"saaty_index: {_fmt(bundle.saaty)}")


def _print_discrepancy(bundle: AnalysisBundle) -> None:
    labels = bundle.matrix.labels
    width = max(6, *(len(s) for s in labels))
    disc = bundle.discrepancy
    print("local discrepancy:")
    print(" " * (width + 2) + "  ".join(f"{s:>{width}}" for s in labels))
    for label, row in zip(labels, disc.values):
        print(f"{label:>{width}}  " + "  ".join(f"{_fmt(v):>{width}}" for v in row))
    i, j = disc.argmax
    print(f"global: {_fmt(disc.global_value)} at ({i},{j})")


def _print_cop(bundle: AnalysisBundle) -> None:
    cop = bundle.cop
    print(f"delta: {_fmt(cop.delta)}")
    pop_margin = "n/a" if cop.pop_margin == float("inf") else _fmt(cop.pop_margin)
    poip_margin = "n/a" if cop.poip_margin == float("inf") else _fmt(cop.poip_margin)
    print(f"POP:  threshold {_fmt(cop.pop_threshold)}  margin {pop_margin}  "
          f"safe {'yes' if cop.pop_safe else 'no'}")
    print(f"POIP: threshold {_fmt(cop.poip_threshold)}  margin {poip_margin}  "
          f"safe {'yes' if cop.poip_safe else 'no'}")
    if cop.pop_violations:
        print("direct POP violations:")
        for i, j in cop.pop_violations:
            print(f"  m({i},{j}) > 1 but weight {i} <= weight {j}")
    else:
        print("direct POP violations: none")
    if cop.poip_violations:
        print("direct POIP violations:")
        for i, j, k, l in cop.poip_violations:
            print(f"  m({i},{j}) > m({k},{l}) > 1 but ratio ({i},{j}) <= ratio ({k},{l})")
    else:
        print("direct POIP violations: none")


def _print_suggestion(bundle: AnalysisBundle) -> None:
    s = suggest_from_bundle(bundle)
    i, j = s.position
    print(f"suggestion: revise ({i},{j})  current {_fmt(s.current_value)}  "
          f"local discrepancy {_fmt(s.local_discrepancy)}  "
          f"consistent target {_fmt(s.consistent_target)}")


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _run(args) -> int:
    if args.tol <= 0:
        raise MatrixError(f"--tol must be positive, got {args.tol}")
    if args.max_iter < 1:
        raise MatrixError(f"--max-iter must be at least 1, got {args.max_iter}")
    matrix = _load_matrix(args)

    if args.command == "advise":
        session = open_session(matrix, tol=args.tol, max_iter=args.max_iter)
        steps = [_parse_step(s) for s in args.step]
        for i, j, value in steps:
            session = session.apply(i, j, value)
        bundle = session.bundle
        if args.output == "json":
            doc = bundle_to_dict(bundle)
            doc["applied_steps"] = [step_to_dict(s) for s in session.steps]
            _emit_json(doc)
        elif steps:
            _print_ranking(bundle)
            print()
            _print_discrepancy(bundle)
            print()
            _print_cop(bundle)
            print()
            _print_suggestion(bundle)
        else:
            _print_suggestion(bundle)
        return EXIT_OK

    bundle = analyze(matrix, tol=args.tol, max_iter=args.max_iter, method=args.method)
    if args.output == "json":
        _emit_json(bundle_to_dict(bundle))
    elif args.command == "rank":
        _print_ranking(bundle)
    elif args.command == "discrepancy":
        _print_discrepancy(bundle)
    elif args.command == "cop":
        _print_cop(bundle)

    if args.command == "cop":
        if bundle.cop.pop_violations or bundle.cop.poip_violations:
            return EXIT_COP_VIOLATION
        if not (bundle.cop.pop_safe and bundle.cop.poip_safe):
            return EXIT_COP_UNSAFE
    return EXIT_OK


def run(argv=None) -> int:
    """Entry point returning the exit code (testable without SystemExit)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # from _Parser.error (exit 1) or --help (exit 0)
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID_INPUT
    try:
        return _run(args)
    except MatrixError as exc:
        where = ""
        if exc.row is not None:
            where = f" at ({exc.row},{exc.col})" if exc.col is not None else f" at row {exc.row}"
        print(f"error{where}: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except ConvergenceError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER_FAILURE


def main() -> None:
    sys.exit(run())
