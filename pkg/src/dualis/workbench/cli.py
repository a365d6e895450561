"""Command-line entry point: ``dualis check``, ``dualis dualize`` and ``dualis enumerate``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from ..config import ENV_VAR
from ..errors import CarrierTooLarge, GateError, HypothesisFailure
from ..fixtures import fixture_text
from ..sweeps import SWEEPS
from ..syntax import ParseError
from .document import parse_document
from .export import export_data, export_dot
from .suites import EXIT_FAILED, EXIT_GATE, EXIT_OK, EXIT_PARSE, run_suite


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_GATE)


def _read(path: str) -> tuple[str, str]:
    """Text of a document; a bare fixture name such as ``m4`` reads the shipped copy."""
    p = Path(path)
    if p.exists():
        return str(p), p.read_text(encoding="utf-8")
    try:
        return path, fixture_text(p.stem if p.suffix == ".duals" else path)
    except FileNotFoundError:
        raise FileNotFoundError(f"no such file or shipped fixture: {path}") from None


def _load(path: str):
    shown, text = _read(path)
    try:
        return parse_document(text)
    except ParseError as exc:
        print(f"{shown}:{exc.line}:{exc.col}: {exc.message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _dump(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def cmd_check(args) -> int:
    doc = _load(args.file)
    if args.suite not in doc.suites:
        print(f"unknown suite {args.suite!r}; available: {', '.join(doc.suites) or 'none'}",
              file=sys.stderr)
        return EXIT_GATE
    result = run_suite(doc, args.suite)
    for rep in result.reports:
        print(rep.summary())
        for check in rep.failed_checks:
            print(f"  FAIL {check.id}: {check.statement}")
            for w in check.failures[:3]:
                print(f"    {w}")
    summary = result.to_dict()["summary"]
    if result.gate:
        print(f"gate: {result.gate}", file=sys.stderr)
    print(f"{args.suite}: {summary['checks']} checks, {summary['instances']} instances, "
          f"{summary['failed_checks']} failed, exit {result.exit_code}")
    if args.json:
        _write(args.json, _dump(result.to_dict()))
    for spec in args.dot or ():
        obj, sep, out = spec.partition("=")
        if not sep:
            print(f"--dot expects OBJ=OUT, got {spec!r}", file=sys.stderr)
            return EXIT_GATE
        _write(out, export_dot(doc, obj))
    return result.exit_code


def cmd_dualize(args) -> int:
    doc = _load(args.file)
    if args.algebra not in doc.algebras:
        print(f"unknown algebra {args.algebra!r}", file=sys.stderr)
        return EXIT_GATE
    obj = f"dual:{args.logic}/{args.algebra}" if args.logic else f"dual:{args.algebra}"
    data = export_data(doc, obj)
    print(f"{data['name']} under {data['logic']}: {len(data['points'])} points, "
          f"{len(data['designated'])} designated, {len(data['family'])} members in the family")
    for elem, members in data["family"].items():
        print(f"  {elem} -> {{{', '.join(members)}}}")
    if args.json:
        _write(args.json, _dump(data))
    if args.dot:
        _write(args.dot, export_dot(doc, obj))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if not args.semilattices:
        print("only --semilattices enumeration is available", file=sys.stderr)
        return EXIT_GATE
    sweep = SWEEPS[args.run](args.max)
    print(f"{sweep.semilattices} meet-semilattices with top, {sweep.distributive} distributive")
    print(sweep.report.summary())
    for check in sweep.report.checks:
        print(f"  {check.id}: {check.instances} instances, {check.failed} failed")
    if args.json:
        data = {"suite": f"enumerate-{args.run}", "fixtures": [sweep.report.to_dict()],
                "summary": {"semilattices": sweep.semilattices, "distributive": sweep.distributive,
                            "failed_checks": len(sweep.report.failed_checks)}}
        _write(args.json, _dump(data))
    return EXIT_OK if sweep.report.ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dualis", description="Check dualities for finite algebras of "
                     "congruential logics.")
    parser.add_argument("--max-size", type=int, metavar="N",
                        help=f"carrier size cap for every computation (same as {ENV_VAR})")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    check = sub.add_parser("check", help="run a suite from a document")
    check.add_argument("file", help="a .duals document or the name of a shipped fixture")
    check.add_argument("--suite", required=True)
    check.add_argument("--json", metavar="OUT", help="write the JSON report ('-' for stdout)")
    check.add_argument("--dot", metavar="OBJ=OUT", action="append",
                       help="write a Hasse diagram of OBJ (e.g. M4, dual:M4, dual:L_HIL/H2)")
    check.add_argument("--max-size", type=int, metavar="N", default=argparse.SUPPRESS)
    check.set_defaults(handler=cmd_check)

    dualize = sub.add_parser("dualize", help="compute and print the dual space of an algebra")
    dualize.add_argument("file")
    dualize.add_argument("--algebra", required=True)
    dualize.add_argument("--logic", help="defaults to the logic a suite pairs with the algebra")
    dualize.add_argument("--json", metavar="OUT")
    dualize.add_argument("--dot", metavar="OUT")
    dualize.add_argument("--max-size", type=int, metavar="N", default=argparse.SUPPRESS)
    dualize.set_defaults(handler=cmd_dualize)

    enum = sub.add_parser("enumerate", help="run a sweep over all small semilattices")
    enum.add_argument("--semilattices", action="store_true")
    enum.add_argument("--max", type=int, default=5)
    enum.add_argument("--run", choices=sorted(SWEEPS), default="characterization")
    enum.add_argument("--json", metavar="OUT")
    enum.add_argument("--max-size", type=int, metavar="N", default=argparse.SUPPRESS)
    enum.set_defaults(handler=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    saved = os.environ.get(ENV_VAR)
    if args.max_size is not None:
        os.environ[ENV_VAR] = str(args.max_size)
    try:
        return args.handler(args)
    except SystemExit as exc:
        return int(exc.code)
    except FileNotFoundError as exc:
        print(exc, file=sys.stderr)
        return EXIT_GATE
    except GateError as exc:
        print(f"gate: {exc.reason}", file=sys.stderr)
        return EXIT_GATE
    except CarrierTooLarge as exc:
        print(f"{exc} (raise it with --max-size or {ENV_VAR})", file=sys.stderr)
        return EXIT_GATE
    except HypothesisFailure as exc:
        print(f"hypotheses not met: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except KeyError as exc:
        print(f"unknown object: {exc.args[0]}", file=sys.stderr)
        return EXIT_GATE
    finally:
        if saved is None:
            os.environ.pop(ENV_VAR, None)
        else:
            os.environ[ENV_VAR] = saved


if __name__ == "__main__":
    sys.exit(main())
