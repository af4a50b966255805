"""Command-line front end.

Exit status: 0 on success, 1 when the substitution fails validation, 2 on
usage or capacity errors.
"""
from __future__ import annotations

import argparse
import sys

from . import catalogue
from .inflation import DEFAULT_CAP, CapacityError
from .language import DEFAULT_LEVEL_CAP, legal_words
from .report import analysis_report, empty_report, render, validation_section
from .substitution import SubstitutionError, parse_spec

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def exit(self, status=0, message=None):
        if message:
            sys.stderr.write(message)
        raise SystemExit(EXIT_USAGE if status else EXIT_OK)


def _psi(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="randsub", description="Topological entropy of random substitutions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check semi-compatibility and primitivity")
    p.add_argument("file")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("analyze", help="bounds table and entropy estimate")
    p.add_argument("file")
    p.add_argument("--max-level", type=int, default=5)
    p.add_argument("--tol", type=float, default=0.01)
    p.add_argument("--psi", type=_psi, default=None, help="tile lengths v1,v2,...")
    p.add_argument("--check-level", type=int, default=3)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="memory cap in stored letters")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p = sub.add_parser("language", help="brute-force legal words of one length")
    p.add_argument("file")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--m-cap", type=int, default=DEFAULT_LEVEL_CAP)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p = sub.add_parser("catalogue", help="analyse a built-in example")
    p.add_argument("name", choices=catalogue.NAMES)
    p.add_argument("--max-level", type=int, default=5)
    p.add_argument("--tol", type=float, default=0.01)
    p.add_argument("--psi", type=_psi, default=None)
    p.add_argument("--check-level", type=int, default=3)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    return parser


def _load(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())


def _language(args, sub) -> tuple[dict, int]:
    report = empty_report(sub, length=args.length, m_cap=args.m_cap, memory_cap=args.cap)
    report["validation"], ok = validation_section(sub)
    if not ok:
        return report, EXIT_INVALID
    sl = legal_words(sub, args.length, m_cap=args.m_cap, cap=args.cap)
    report["language"] = {"length": sl.length, "count": len(sl),
                          "words": sub.alphabet.sorted(sl.words), "levels_used": sl.levels_used,
                          "converged": sl.converged, "window": sl.window}
    if not sl.converged:
        report["warnings"].append(
            f"legal word set not stable after {sl.levels_used} levels; it may be incomplete")
    return report, EXIT_OK


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        if args.command == "catalogue":
            entry = catalogue.get_example(args.name)
            sub = entry.substitution
        else:
            sub = _load(args.file)
        if args.command == "validate":
            report = empty_report(sub)
            report["validation"], ok = validation_section(sub)
            code = EXIT_OK if ok else EXIT_INVALID
        elif args.command == "language":
            report, code = _language(args, sub)
        else:
            kwargs = {}
            if args.command == "catalogue":
                kwargs = dict(provider=entry.recurrence, enumerate_max=entry.enumerate_max,
                              name=entry.name, known_entropy=entry.known_entropy)
            report = analysis_report(sub, max_level=args.max_level, tol=args.tol, psi=args.psi,
                                     check_level=args.check_level, cap=args.cap, **kwargs)
            code = EXIT_OK if report["validation"]["ok"] else EXIT_INVALID
    except SubstitutionError as exc:
        print(f"randsub: invalid substitution: {exc}", file=stderr)
        return EXIT_INVALID
    except (OSError, ValueError) as exc:
        print(f"randsub: {exc}", file=stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"randsub: capacity exceeded: {exc}", file=stderr)
        return EXIT_USAGE

    stdout.write(render(report, args.format))
    if code == EXIT_INVALID:
        for v in report["validation"]["violations"]:
            wit = "" if v["witness"] is None else f": {v['witness'][0]} vs {v['witness'][1]}"
            letter = "" if v["letter"] is None else f"letter {v['letter']}, "
            print(f"randsub: validation failed ({letter}{v['reason']}){wit}", file=stderr)
    for w in report["warnings"]:
        print(f"randsub: warning: {w}", file=stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
