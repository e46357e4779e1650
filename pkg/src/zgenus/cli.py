"""Command line front end.

Exit codes: 0 when every requested check passed, 1 when a check failed,
2 on unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus import run_corpus
from .documents import parse
from .errors import ZGenusError
from .genus import SearchBudget
from .matrix import LambdaMatrix
from .pipeline import COMMANDS, run

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zgenus", description="Exact Z-genus invariants of knots and boundary links.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    common.add_argument("--coeff-bound", type=int, default=1, help="coefficient bound for searches")
    common.add_argument("--max-candidates", type=int, default=2000, help="candidate budget per search")
    common.add_argument("--degree-bound", type=int, default=1, help="exponent bound for Hermitian entries")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("input", nargs="?", default="-", help="link document path, or - for stdin")
        if name == "verify":
            p.add_argument("--hermitian", help="JSON file with a matrix of polynomial strings")
            p.add_argument("--genus", type=int, help="claimed genus (default: document or computed)")
    c = sub.add_parser("corpus", parents=[common])
    c.add_argument("--corpus-dir", help="directory of corpus files (default: bundled corpus)")
    return parser


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        budget = SearchBudget(args.coeff_bound, args.max_candidates, args.degree_bound, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if args.command == "corpus":
        try:
            summary = run_corpus(args.corpus_dir, budget)
        except (OSError, ZGenusError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        print(json.dumps(summary.to_json(), indent=2) if args.json else summary.table())
        return EXIT_OK if summary.ok else EXIT_FAILED

    try:
        doc = parse(_read(args.input))
        hermitian = None
        if getattr(args, "hermitian", None):
            hermitian = LambdaMatrix.from_json(json.loads(_read(args.hermitian)))
        report = run(args.command, doc, budget, hermitian, getattr(args, "genus", None))
    except (OSError, ValueError, ZGenusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    print(json.dumps(report.to_json(), indent=2) if args.json else report.render())
    return EXIT_OK if report.ok else EXIT_FAILED


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
