"""Command-line interface: ``tvpi <command> [input] [flags]``."""
from __future__ import annotations

import argparse
import sys

from . import corpus
from .commands import (
    COMMANDS,
    EXIT_INPUT,
    Options,
    Report,
    corpus_report,
    machine_json,
    run,
)
from .documents import DocumentError, parse
from .fpgroup import DEFAULT_MAX_COSETS


def _load(source: str):
    if ":" in source and not source.endswith(".json"):
        try:
            return corpus.builtin(source)
        except (KeyError, ValueError) as e:
            raise DocumentError([str(e)]) from None
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise DocumentError([f"cannot read {source}: {e.strerror}"]) from None
    return parse(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tvpi",
        description="Fundamental groups of toric and complexity-one T-varieties.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", nargs="?", help="JSON document path, '-' for stdin, or a built-in name such as duval:E8")
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    p.add_argument("--faces", choices=("rays", "all"), default="rays")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--export", choices=("gap",), default=None)
    p.add_argument("--allow-improper", action="store_true",
                   help="compute presentations even when the properness test fails")
    p.add_argument("--update-golden", action="store_true", help=argparse.SUPPRESS)
    return p


def _emit(report: Report, fmt: str) -> None:
    print(machine_json(report) if fmt == "json" else report.to_text())


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "corpus":
        report = corpus_report(update_golden=args.update_golden)
        _emit(report, args.format)
        return report.exit_code
    if args.input is None:
        report = Report(args.command, exit_code=EXIT_INPUT, errors=["an input document is required"])
        _emit(report, args.format)
        return EXIT_INPUT
    try:
        doc = _load(args.input)
    except DocumentError as e:
        report = Report(args.command, exit_code=EXIT_INPUT, errors=e.errors)
        _emit(report, args.format)
        return EXIT_INPUT
    opts = Options(
        max_cosets=args.max_cosets,
        faces=args.faces,
        allow_improper=args.allow_improper,
        export_gap=args.export == "gap",
    )
    report = run(args.command, doc, opts)
    _emit(report, args.format)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
