"""Command-line front end.

Three subcommands:

* ``table``   -- coefficient tables for a chosen class, as JSON, CSV or
  an aligned text table.
* ``verify``  -- run the cross-check battery and report PASS/FAIL per
  check with timings.
* ``equivariant`` -- fixed-point-basis coefficients at a chosen level
  and twist, keyed by pairs of partitions.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 resource limit exceeded.  All rational values are printed exactly,
as integer or "p/q" strings, never as floats.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .closedform import (
    CoeffTable,
    PRESET_NAMES,
    a_k_table,
    a_kl_table,
    chern_character_tables,
    preset_class,
    taut_tables,
    to_universal,
)
from .localisation import equivariant_class_coeffs
from .series import Series1
from .verification import verify_chern_character, verify_multiplicative

MAX_TABLE_DEGREE = 32
MAX_VERIFY_ORDER = 14
MAX_EQUIVARIANT_LEVEL = 16
DEFAULT_EQUIVARIANT_BOUND = 10


class UsageError(Exception):
    """Bad flags or an ill-posed request; maps to exit code 2."""


class ResourceLimitError(Exception):
    """Request beyond the configured budget; maps to exit code 3."""


@dataclass(frozen=True)
class ClassSpec:
    """A parsed --class argument.

    Either one of the named presets (``preset`` is set) or an explicit
    coefficient list c1, c2, ... defining f = 1 + c1 x + c2 x^2 + ...
    (``coefficients`` is set).  ``label`` is what the user typed.
    """

    label: str
    preset: str | None = None
    coefficients: tuple[Fraction, ...] | None = None

    @property
    def is_chern_character(self) -> bool:
        return self.preset == "chern-character"


def parse_class_spec(text: str) -> ClassSpec:
    cleaned = text.strip()
    if cleaned in PRESET_NAMES or cleaned == "chern-character":
        return ClassSpec(cleaned, preset=cleaned)
    parts = [piece.strip() for piece in cleaned.split(",")]
    if not cleaned or any(piece == "" for piece in parts):
        raise UsageError(
            f"cannot parse class {text!r}: expected a preset name "
            f"({', '.join(PRESET_NAMES)}, chern-character) or a comma-separated "
            f"list of rationals like 1,-1/2"
        )
    try:
        coefficients = tuple(Fraction(piece) for piece in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse class {text!r}: {exc}") from None
    return ClassSpec(cleaned, coefficients=coefficients)


def class_series(spec: ClassSpec, order: int) -> Series1:
    """The defining series of a class, truncated at the requested order."""
    if spec.is_chern_character:
        raise UsageError(
            "the chern-character preset has no defining series; "
            "it is not a multiplicative class"
        )
    if spec.preset is not None:
        return preset_class(spec.preset, order).f
    leading = (Fraction(1),) + spec.coefficients
    return Series1.from_coefficients(leading[: order + 1], order)


def _render(value) -> str:
    return str(value)


def _ordered_pairs(table: CoeffTable) -> list[tuple[int, int]]:
    """Table indices ascending by total degree, then descending k."""
    return sorted(table.entries, key=lambda pair: (pair[0] + pair[1], -pair[0]))


def _table_json(label: str, max_degree: int, a_k: dict[int, Fraction], table: CoeffTable) -> str:
    payload = {
        "class": label,
        "max_degree": max_degree,
        "a_k": [_render(a_k[k]) for k in range(1, max_degree + 1)],
        "a_kl": [
            {"k": k, "l": l, "value": _render(table.entries[(k, l)])}
            for k, l in _ordered_pairs(table)
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def _table_csv(a_k: dict[int, Fraction], table: CoeffTable, max_degree: int) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["k", "l", "value"])
    rows = [(k, 0, a_k[k]) for k in range(1, max_degree + 1)]
    rows.extend((k, l, table.entries[(k, l)]) for k, l in _ordered_pairs(table))
    rows.sort(key=lambda row: (row[0] + row[1], -row[0]))
    for k, l, value in rows:
        writer.writerow([k, l, _render(value)])
    return buffer.getvalue()


def _aligned_rows(header: list[str], values: list[str], names: tuple[str, str]) -> str:
    widths = [max(len(h), len(v)) for h, v in zip(header, values)]
    label_width = max(len(names[0]), len(names[1]))
    top = names[0].ljust(label_width) + "  " + "  ".join(
        h.rjust(w) for h, w in zip(header, widths)
    )
    bottom = names[1].ljust(label_width) + "  " + "  ".join(
        v.rjust(w) for v, w in zip(values, widths)
    )
    return top + "\n" + bottom + "\n"


def _table_pretty(label: str, max_degree: int, a_k: dict[int, Fraction], table: CoeffTable) -> str:
    lines = [f"class {label}, table kind {table.kind}, total degree <= {max_degree}", ""]
    kept_k = [k for k in range(1, max_degree + 1) if a_k[k] != 0]
    if kept_k:
        lines.append(
            _aligned_rows(
                [str(k) for k in kept_k],
                [_render(a_k[k]) for k in kept_k],
                ("k", "a_k"),
            )
        )
    else:
        lines.append("a_k: all zero\n")
    kept_kl = [(k, l) for k, l in _ordered_pairs(table) if table.entries[(k, l)] != 0]
    if kept_kl:
        lines.append(
            _aligned_rows(
                [f"({k},{l})" for k, l in kept_kl],
                [_render(table.entries[(k, l)]) for k, l in kept_kl],
                ("(k,l)", "a_kl"),
            )
        )
    else:
        lines.append("a_kl: all zero\n")
    lines.append("zero entries suppressed; use --format json or csv for the dense table\n")
    return "\n".join(lines)


def cmd_table(args: argparse.Namespace) -> int:
    spec = parse_class_spec(args.class_spec)
    max_degree = args.max_degree
    if max_degree < 2:
        raise UsageError("--max-degree must be at least 2")
    if max_degree > MAX_TABLE_DEGREE:
        raise ResourceLimitError(
            f"--max-degree {max_degree} exceeds the limit of {MAX_TABLE_DEGREE}"
        )

    target = args.target
    if target is None:
        target = "chern-character" if spec.is_chern_character else "tangent"
    if spec.is_chern_character and target != "chern-character":
        raise UsageError("the chern-character class only supports --target chern-character")
    if target == "chern-character" and not spec.is_chern_character:
        raise UsageError("--target chern-character requires --class chern-character")
    if target == "tautological" and args.basis == "universal":
        raise UsageError("tautological tables have no universal form")

    if target == "chern-character":
        a_k, table = chern_character_tables(max_degree)
    elif target == "tautological":
        a_k, table = taut_tables(class_series(spec, max_degree + 1), max_degree)
    else:
        f = class_series(spec, max_degree + 1)
        a_k = a_k_table(f, max_degree)
        table = a_kl_table(f, max_degree)
    if args.basis == "universal":
        table = to_universal(table)

    if args.format == "json":
        sys.stdout.write(_table_json(spec.label, max_degree, a_k, table))
    elif args.format == "csv":
        sys.stdout.write(_table_csv(a_k, table, max_degree))
    else:
        sys.stdout.write(_table_pretty(spec.label, max_degree, a_k, table))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    spec = parse_class_spec(args.class_spec)
    order = args.order
    if order < 2:
        raise UsageError("--order must be at least 2")
    if order > MAX_VERIFY_ORDER:
        raise ResourceLimitError(f"--order {order} exceeds the limit of {MAX_VERIFY_ORDER}")

    if spec.is_chern_character:
        results = verify_chern_character(order)
    else:
        f = class_series(spec, order + 2)
        results = verify_multiplicative(f, spec.label, order)

    width = max(len(result.name) for result in results)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        sys.stdout.write(f"{status}  {result.name.ljust(width)}  {result.seconds:8.3f}s\n")
        if not result.passed:
            sys.stdout.write(f"      {result.detail}\n")
    failed = sum(1 for result in results if not result.passed)
    sys.stdout.write(
        f"{len(results) - failed}/{len(results)} checks passed "
        f"(class {spec.label}, order {order})\n"
    )
    return 0 if failed == 0 else 1


def cmd_equivariant(args: argparse.Namespace) -> int:
    spec = parse_class_spec(args.class_spec)
    if spec.is_chern_character:
        raise UsageError(
            "equivariant sums need a multiplicative class; "
            "chern-character is not one"
        )
    level = args.level
    bound = args.bound
    if level < 0:
        raise UsageError("--level must be nonnegative")
    if bound > MAX_EQUIVARIANT_LEVEL:
        raise ResourceLimitError(
            f"--bound {bound} exceeds the hard limit of {MAX_EQUIVARIANT_LEVEL}"
        )
    if level > bound:
        raise ResourceLimitError(
            f"--level {level} exceeds the configured bound of {bound}; "
            f"raise --bound if you really want this"
        )
    f = class_series(spec, max(level, 1))
    try:
        vector = equivariant_class_coeffs(f, args.gamma, level)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    if args.format == "json":
        payload = {
            "class": spec.label,
            "gamma": args.gamma,
            "level": level,
            "entries": [
                {
                    "lambda0": list(pair.lambda0.parts),
                    "lambda1": list(pair.lambda1.parts),
                    "value": _render(value),
                }
                for pair, value in vector.entries
            ],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["lambda0", "lambda1", "value"])
        for pair, value in vector.entries:
            writer.writerow([str(pair.lambda0), str(pair.lambda1), _render(value)])
        sys.stdout.write(buffer.getvalue())
    else:
        width = max(len(str(pair)) for pair, _ in vector.entries)
        sys.stdout.write(f"class {spec.label}, twist gamma={args.gamma}, level {level}\n\n")
        for pair, value in vector.entries:
            sys.stdout.write(f"{str(pair).ljust(width)}  {_render(value)}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbfock",
        description=(
            "Exact coefficient tables for characteristic classes of "
            "Hilbert schemes of points."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    classes_help = (
        "preset name (trivial, chern-total, todd, l-genus, a-hat, chern-character) "
        "or comma-separated rationals c1,c2,... for f = 1 + c1 x + c2 x^2 + ..."
    )

    table = subparsers.add_parser("table", help="print coefficient tables")
    table.add_argument("--class", dest="class_spec", required=True, help=classes_help)
    table.add_argument("--max-degree", type=int, default=12, help="largest total degree")
    table.add_argument(
        "--target",
        choices=("tangent", "tautological", "chern-character"),
        default=None,
        help="which bundle family the table describes (default: inferred from the class)",
    )
    table.add_argument(
        "--basis",
        choices=("theorem", "universal"),
        default="theorem",
        help="raw coefficients or the operator-basis conversion",
    )
    table.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    table.set_defaults(func=cmd_table)

    verify = subparsers.add_parser("verify", help="run the cross-check battery")
    verify.add_argument("--class", dest="class_spec", required=True, help=classes_help)
    verify.add_argument("--order", type=int, default=8, help="total degree to check through")
    verify.set_defaults(func=cmd_verify)

    equivariant = subparsers.add_parser(
        "equivariant", help="fixed-point-basis coefficients at one level"
    )
    equivariant.add_argument("--class", dest="class_spec", required=True, help=classes_help)
    equivariant.add_argument("--gamma", type=int, default=2, help="twist of the line bundle")
    equivariant.add_argument("--level", type=int, required=True, help="number of points")
    equivariant.add_argument(
        "--bound",
        type=int,
        default=DEFAULT_EQUIVARIANT_BOUND,
        help="refuse levels above this (soft budget)",
    )
    equivariant.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    equivariant.set_defaults(func=cmd_equivariant)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
