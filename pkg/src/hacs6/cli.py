"""Command-line front end.

Exit status: 0 success, 1 a verified claim failed, 2 usage or parameter error,
3 internal consistency error.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction
from pathlib import Path

from .catalog import (ALL_CASES, SCHEMA, ConstructionError, ParameterError, build_model,
                      params_from_dict, schema_text)
from .geometry import GeometryError, report
from .verify import SUITES, run_suite, solve_a1_family
from .verify.a1solver import grid_from_axes
from .verify.grids import default_grid

EXIT_OK, EXIT_CLAIM, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def _load_json(text: str):
    """Inline JSON, or the path of a JSON file."""
    path = Path(text)
    try:
        if not text.lstrip().startswith(("{", "[")) and path.exists():
            return json.loads(path.read_text())
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse JSON from {text!r}: {exc}") from None


def _descriptor(args) -> dict:
    obj = _load_json(args.params) if args.params else {}
    if not isinstance(obj, dict):
        raise UsageError("--params must be a JSON object")
    if args.case:
        obj = {**obj, "case": args.case}
    if "case" not in obj:
        raise UsageError("a case is required (--case or a 'case' key in --params)")
    return obj


def _tol(args) -> float:
    try:
        return float(Fraction(args.tol))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--tol must be a rational number, got {args.tol!r}") from None


def _model(args, obj: dict):
    P = params_from_dict(obj, exact=args.mode == "exact")
    model = build_model(P)
    if args.mode == "float":
        model = dataclasses.replace(model, float_tol=_tol(args))
    return model


def _emit(args, obj, text: str | None = None):
    out = dumps(obj) if args.format == "json" or text is None else text
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def _text_record(rec: dict) -> str:
    return "".join(f"{k:<22} {json.dumps(v, sort_keys=True, ensure_ascii=False)}\n" for k, v in sorted(rec.items()))


def cmd_list(args) -> int:
    rows = [{"case": c, "schema": schema_text(c)} for c in ALL_CASES]
    text = "".join(f"{r['case']:<6} {r['schema']}\n" for r in rows)
    _emit(args, {"cases": rows}, text)
    return EXIT_OK


def cmd_build(args) -> int:
    model = _model(args, _descriptor(args))
    _emit(args, model.to_json())
    return EXIT_OK


def cmd_report(args) -> int:
    rec = report(_model(args, _descriptor(args)))
    _emit(args, rec, _text_record(rec))
    return EXIT_OK


def _claims_output(args, reports) -> int:
    data = [r.to_json() for r in reports]
    text = "".join(r.summary_line() + "\n" for r in reports)
    _emit(args, data, text)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CLAIM


def cmd_verify(args) -> int:
    names = args.suite or list(SUITES)
    bad = [n for n in names if n not in SUITES]
    if bad:
        raise UsageError(f"unknown suite(s) {bad}; choose from {', '.join(SUITES)}")
    reports = []
    for name in names:
        cases = [args.case] if (args.case and name == "table") else None
        reports.extend(run_suite(name, literal=args.literal, cases=cases))
    return _claims_output(args, reports)


def cmd_solve_a1(args) -> int:
    points = None
    if args.grid:
        axes = _load_json(args.grid)
        if not isinstance(axes, dict):
            raise UsageError("--grid for solve-a1 is an object of axes (lam, b, c, eps, a, a_ie)")
        unknown = set(axes) - {"lam", "b", "c", "eps", "a", "a_ie"}
        if unknown:
            raise UsageError(f"unknown grid axes {sorted(unknown)}")
        points = grid_from_axes(**axes)
    return _claims_output(args, [solve_a1_family(points)])


def _sweep_points(args) -> list[dict]:
    if args.grid:
        data = _load_json(args.grid)
        if isinstance(data, dict):
            data = [{"case": data.get("case", args.case), "params": p} for p in data.get("points", [])]
        if not isinstance(data, list):
            raise UsageError("--grid for sweep is a list of descriptors or {case, points}")
        return [d if "case" in d else {**d, "case": args.case} for d in data]
    if not args.case:
        raise UsageError("sweep needs --case or --grid")
    return [P.to_json() for P in default_grid(args.case)]


def cmd_sweep(args) -> int:
    recs = []
    for desc in _sweep_points(args):
        recs.append(report(_model(args, desc)))
    recs.sort(key=lambda r: (r["case"], json.dumps(r["params"], sort_keys=True)))
    text = "".join(_text_record(r) + "\n" for r in recs)
    _emit(args, recs, text)
    return EXIT_OK


COMMANDS = {"list": cmd_list, "build": cmd_build, "report": cmd_report, "verify": cmd_verify,
            "solve-a1": cmd_solve_a1, "sweep": cmd_sweep}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--case", choices=list(SCHEMA) + ["G2c", "G2s"], help="catalog case, e.g. A1.1")
    common.add_argument("--params", help="parameters as inline JSON or a JSON file")
    common.add_argument("--mode", choices=("exact", "float"), default="exact")
    common.add_argument("--tol", default="1/1000000000", help="zero tolerance in float mode (rational)")
    common.add_argument("--grid", help="grid file or inline JSON (solve-a1, sweep)")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="hacs6", description=(
        "Homogeneous almost complex structures on 6-dimensional spaces with semisimple isotropy."))
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("list", parents=[common], help="list catalog cases and parameter schemas")
    sub.add_parser("build", parents=[common], help="write the model (structure constants, J, omega)")
    sub.add_parser("report", parents=[common], help="geometry report for one model")
    v = sub.add_parser("verify", parents=[common], help="run claim suites")
    v.add_argument("--suite", action="append", help=f"one of {', '.join(SUITES)} (repeatable)")
    v.add_argument("--literal", action="store_true",
                   help="also check printed claims known to disagree with the computation")
    sub.add_parser("solve-a1", parents=[common], help="solve the A1 bracket ansatz on a grid")
    sub.add_parser("sweep", parents=[common], help="geometry reports over a parameter grid")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ParameterError, ValueError) as exc:
        print(f"hacs6: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GeometryError, ConstructionError) as exc:
        print(f"hacs6: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
