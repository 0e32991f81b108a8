"""Command-line front end.

Every command prints one envelope ``{"command": ..., "reports": [...]}``
(JSON) or one CSV row per report with the columns in :data:`CSV_COLUMNS`.
Rationals are written as ``"num/den"`` strings.

Exit codes: 0 ok, 1 golden mismatch, 2 parse error, 3 invalid parameters,
4 unsupported space.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import charclass, cohomology, decide
from .errors import (
    DimensionNotDivisibleBy4,
    InvalidParameters,
    InvalidType,
    SpaceParseError,
    UnsupportedSpace,
)
from .spaces import SpaceId, complex_dimension, dimension, format_space, parse_space

EXIT_OK, EXIT_GOLDEN, EXIT_PARSE, EXIT_INVALID, EXIT_UNSUPPORTED = 0, 1, 2, 3, 4

CSV_COLUMNS = (
    "space",
    "family",
    "verdict",
    "justification",
    "disputed",
    "dimension",
    "complex_dimension",
    "euler_characteristic",
    "poincare",
    "signature_lgenus",
    "signature_closed_form",
    "pontrjagin_numbers",
    "degree_set",
    "row",
    "golden_verdict",
    "golden_match",
)


class _Fail(Exception):
    def __init__(self, code: int, message: str, partial: list | None = None):
        super().__init__(message)
        self.code = code
        self.partial = partial


def rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _parse(text: str) -> SpaceId:
    try:
        return parse_space(text)
    except SpaceParseError as exc:
        raise _Fail(EXIT_PARSE, str(exc)) from exc
    except InvalidParameters as exc:
        raise _Fail(EXIT_INVALID, str(exc)) from exc


def _base(space: SpaceId) -> dict:
    try:
        c = decide.classify(space)
    except (InvalidParameters, InvalidType) as exc:
        raise _Fail(EXIT_INVALID, str(exc)) from exc
    rec = {
        "space": format_space(space),
        "family": space.family,
        "verdict": c.verdict.value,
        "justification": str(c.justification),
        "disputed": c.disputed,
        "dimension": dimension(space),
        "complex_dimension": complex_dimension(space),
        "euler_characteristic": cohomology.euler_characteristic(space),
    }
    return rec


def _closed_form(space):
    v = charclass.signature_closed_form(space)
    return v.value if isinstance(v, charclass.Sig) else v


def _parse_partition(text: str) -> tuple[int, ...]:
    try:
        part = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError as exc:
        raise _Fail(EXIT_PARSE, f"bad partition {text!r}") from exc
    if not part:
        raise _Fail(EXIT_PARSE, f"empty partition {text!r}")
    return part


# ----------------------------------------------------------------------------
# commands


def cmd_classify(args) -> tuple[list[dict], int]:
    return [_base(_parse(args.space))], EXIT_OK


def cmd_table1(args) -> tuple[list[dict], int]:
    rows = []
    mismatches = 0
    order = {f: i for i, f in enumerate(decide.BLOCK_ORDER)}
    sweep = sorted(decide.default_sweep(), key=lambda s: (order[s.family], s.params))
    for space in sweep:
        rec = _base(space)
        golden, row = decide.golden_verdict(space)
        rec["row"] = row.condition
        rec["golden_verdict"] = golden.value
        rec["golden_match"] = golden.value == rec["verdict"]
        if not rec["golden_match"]:
            mismatches += 1
        rows.append(rec)
    code = EXIT_GOLDEN if (args.golden and mismatches) else EXIT_OK
    if args.golden and mismatches:
        print(f"golden mismatch in {mismatches} row(s)", file=sys.stderr)
    return rows, code


def cmd_report(args) -> tuple[list[dict], int]:
    space = _parse(args.space)
    rec = _base(space)
    rec["signature_closed_form"] = _closed_form(space)
    want_all = not (args.signature or args.pontrjagin or args.poincare)
    try:
        if args.poincare or want_all:
            rec["poincare"] = list(cohomology.hirsch_poincare(space))
        if args.signature or want_all:
            if rec["dimension"] % 4 == 0:
                rec["signature_lgenus"] = charclass.lgenus_signature(space)
            else:
                rec["signature_lgenus"] = None
        if args.pontrjagin:
            numbers = {}
            for text in args.pontrjagin:
                part = _parse_partition(text)
                numbers[",".join(map(str, part))] = rational(charclass.pontrjagin_number(space, part))
            rec["pontrjagin_numbers"] = numbers
    except UnsupportedSpace as exc:
        raise _Fail(EXIT_UNSUPPORTED, str(exc), partial=[rec]) from exc
    except (DimensionNotDivisibleBy4, InvalidParameters) as exc:
        raise _Fail(EXIT_INVALID, str(exc), partial=[rec]) from exc
    return [rec], EXIT_OK


def cmd_degreeset(args) -> tuple[list[dict], int]:
    try:
        delta = int(args.delta)
    except ValueError as exc:
        raise _Fail(EXIT_PARSE, f"delta {args.delta!r} is not an integer") from exc
    if delta < 0:
        raise _Fail(EXIT_INVALID, "delta must be nonnegative")
    space = _parse(args.space)
    rec = _base(space)
    ds = decide.degree_set(delta, decide.Verdict(rec["verdict"]))
    rec["degree_set"] = {
        "delta": ds.delta,
        "signs": ds.signs.value,
        "text": str(ds),
        "resolutions": [sorted(r) for r in ds.resolutions()],
    }
    return [rec], EXIT_OK


# ----------------------------------------------------------------------------
# output


def _csv_cell(key, value):
    if value is None:
        return ""
    if key == "poincare":
        return " ".join(map(str, value))
    if key == "pontrjagin_numbers":
        return ";".join(f"{k}={v}" for k, v in value.items())
    if key == "degree_set":
        return value["text"]
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render(command: str, reports: list[dict], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in reports:
            w.writerow([_csv_cell(k, r.get(k)) for k in CSV_COLUMNS])
        return buf.getvalue()
    return json.dumps({"command": command, "reports": reports}, indent=2, ensure_ascii=False) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symorient", description=__doc__.splitlines()[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv"), default="json")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[fmt], help="OR/OP verdict for one space")
    p.add_argument("space", help="FAMILY[:p[,q]], e.g. DIII:6, AIII:2,3, TypeIV:A,6")

    p = sub.add_parser("table1", parents=[fmt], help="reproduce the classification table over the default sweep")
    p.add_argument("--golden", action="store_true", help="exit 1 if any verdict differs from the table")

    p = sub.add_parser("report", parents=[fmt], help="cohomology and characteristic-class data")
    p.add_argument("space")
    p.add_argument("--signature", action="store_true")
    p.add_argument("--pontrjagin", action="append", metavar="PARTITION", help="e.g. 1,1 or 2; repeatable")
    p.add_argument("--poincare", action="store_true")

    p = sub.add_parser("degreeset", parents=[fmt], help="possible degrees of maps")
    p.add_argument("delta")
    p.add_argument("space")
    return ap


COMMANDS = {
    "classify": cmd_classify,
    "table1": cmd_table1,
    "report": cmd_report,
    "degreeset": cmd_degreeset,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    fmt = getattr(args, "format", "json")
    try:
        reports, code = COMMANDS[args.command](args)
    except _Fail as exc:
        if exc.partial:
            sys.stdout.write(render(args.command, exc.partial, fmt))
        print(f"symorient: {exc}", file=sys.stderr)
        return exc.code
    sys.stdout.write(render(args.command, reports, fmt))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
