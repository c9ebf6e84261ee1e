"""Command-line front end.

Commands: ``validate``, ``measure``, ``check``, ``report``, ``generate``.
Payload goes to stdout (or ``--out``), diagnostics to stderr.  Exit codes:
0 success / all checks pass, 1 domain failure (violations, failed checks,
size guards), 2 IO or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .catspec import CategorySpec, parse_spec, render_spec, validate_spec
from .chains import gr_measure, gr_table
from .errors import SpecError, SpecFormatError
from .generator import (
    FIXTURE_DB_WINDOW,
    FIXTURE_FINAL_EXAMPLE,
    fixture,
    generate_an,
)
from .report import Report
from .theorems import (
    SUITE_EXT_BOUND,
    SUITE_GR_AXIOMS,
    SUITE_MAIN_PROPERTY,
    SUITE_SMALL_LEMMAS,
    brauer_thrall_report,
    check_ext_bound,
    check_gr_axioms,
    check_main_property,
    check_small_lemmas,
)

_SUITES = {
    SUITE_GR_AXIOMS: check_gr_axioms,
    SUITE_MAIN_PROPERTY: check_main_property,
    SUITE_EXT_BOUND: check_ext_bound,
    SUITE_SMALL_LEMMAS: check_small_lemmas,
}


def _emit(args: argparse.Namespace, payload: str) -> None:
    if not payload.endswith("\n"):
        payload += "\n"
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)


def _load(path: str) -> CategorySpec:
    return parse_spec(Path(path).read_text(encoding="utf-8"))


def _require_valid(args: argparse.Namespace, spec: CategorySpec) -> bool:
    report = validate_spec(spec)
    if report.ok:
        return True
    print("spec failed validation:", file=sys.stderr)
    print(report.render_text(), file=sys.stderr)
    return False


def _cmd_validate(args: argparse.Namespace) -> int:
    spec = _load(args.path)
    report = validate_spec(spec)
    if args.format == "json":
        _emit(args, json.dumps(report.to_json_dict(), indent=2))
    else:
        _emit(args, report.render_text())
    return 0 if report.ok else 1


def _measure_payload(spec: CategorySpec, as_json: bool) -> str:
    table = gr_table(spec)
    if as_json:
        doc: dict[str, Any] = {
            "spec": spec.name,
            "objects": [
                {
                    "id": m,
                    "length": spec.theta[m],
                    "measure": table.measures[m].render(compact=True),
                }
                for m in spec.indecomposables
            ],
            "gr_chain": [ch.render(compact=True) for ch in table.gr_chain],
            "blocks": {
                ch.render(compact=True): list(table.blocks[ch])
                for ch in table.gr_chain
            },
        }
        return json.dumps(doc, indent=2)
    header = ("object", "length", "GR measure")
    rows = [
        (m, str(spec.theta[m]), table.measures[m].render())
        for m in spec.indecomposables
    ]
    widths = [
        max(len(header[i]), max((len(r[i]) for r in rows), default=0))
        for i in range(3)
    ]
    lines = ["  ".join(header[i].ljust(widths[i]) for i in range(3)).rstrip()]
    for row in rows:
        lines.append("  ".join(row[i].ljust(widths[i]) for i in range(3)).rstrip())
    lines.append("GR chain: " + " < ".join(ch.render() for ch in table.gr_chain))
    return "\n".join(lines)


def _cmd_measure(args: argparse.Namespace) -> int:
    spec = _load(args.path)
    if not _require_valid(args, spec):
        return 1
    if args.object is not None:
        measure = gr_measure(spec, args.object)
        if args.format == "json":
            _emit(
                args,
                json.dumps(
                    {"object": args.object, "measure": measure.render(compact=True)}
                ),
            )
        else:
            _emit(args, measure.render(compact=True))
        return 0
    _emit(args, _measure_payload(spec, args.format == "json"))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    spec = _load(args.path)
    report = validate_spec(spec)
    if not report.ok:
        if args.format == "json":
            _emit(args, json.dumps(report.to_json_dict(), indent=2))
        else:
            _emit(args, report.render_text())
        print("spec failed validation; checker suites not run", file=sys.stderr)
        return 1
    suites = list(_SUITES) if args.suite == "all" else [args.suite]
    reports: list[Report] = [_SUITES[s](spec) for s in suites]
    if args.format == "json":
        _emit(
            args,
            json.dumps(
                {
                    "ok": all(r.ok for r in reports),
                    "reports": [r.to_json_dict() for r in reports],
                },
                indent=2,
            ),
        )
    else:
        _emit(args, "\n\n".join(r.render_text() for r in reports))
    return 0 if all(r.ok for r in reports) else 1


def _cmd_report(args: argparse.Namespace) -> int:
    spec = _load(args.path)
    if not _require_valid(args, spec):
        return 1
    report = brauer_thrall_report(spec)
    if args.format == "json":
        _emit(args, json.dumps(report.to_json_dict(), indent=2))
    else:
        _emit(args, report.render_text())
    return 0 if report.ok else 1


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.kind == "an":
        if args.n is None:
            raise SpecFormatError("generate an requires --n")
        spec = generate_an(args.n)
    else:
        name = args.name or FIXTURE_FINAL_EXAMPLE
        spec = fixture(name, window=args.window)
    text = render_spec(spec)
    Path(args.out).write_text(text, encoding="utf-8")
    summary = (
        f"wrote {args.out}: {spec.name} with {len(spec.indecomposables)} "
        f"indecomposables, {len(spec.conflations)} conflations"
    )
    sys.stdout.write(summary + "\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grcat",
        description=(
            "inspect finite length-category spec files: validate them, "
            "compute Gabriel-Roiter measures, run consistency suites, and "
            "generate reference instances"
        ),
    )
    fmt_parent = argparse.ArgumentParser(add_help=False)
    fmt_parent.add_argument(
        "--format", choices=("table", "json"), default="table", help="output format"
    )
    fmt_parent.add_argument("--verbose", action="store_true", help="extra stderr notes")
    out_parent = argparse.ArgumentParser(add_help=False)
    out_parent.add_argument(
        "--out", default=None, help="write the payload to a file instead of stdout"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "validate",
        parents=[fmt_parent, out_parent],
        help="check a spec file against the invariants",
    )
    p.add_argument("path")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser(
        "measure",
        parents=[fmt_parent, out_parent],
        help="print the measure table or one measure",
    )
    p.add_argument("path")
    p.add_argument("--object", help="id of a single object to measure")
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("check", parents=[fmt_parent, out_parent], help="run checker suites")
    p.add_argument("path")
    p.add_argument(
        "--suite",
        choices=(*_SUITES.keys(), "all"),
        default="all",
    )
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser(
        "report",
        parents=[fmt_parent, out_parent],
        help="counts, bounds, and the measure partition",
    )
    p.add_argument("path")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("generate", parents=[fmt_parent], help="write a reference spec file")
    p.add_argument("kind", choices=("an", "fixture"))
    p.add_argument("--n", type=int, help="number of vertices for kind=an")
    p.add_argument(
        "--name",
        choices=(FIXTURE_FINAL_EXAMPLE, FIXTURE_DB_WINDOW),
        help="fixture name for kind=fixture",
    )
    p.add_argument("--window", type=int, default=1, help="window size for db-window")
    p.add_argument("--out", required=True, help="output path")
    p.set_defaults(func=_cmd_generate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
