"""Command line front end.

Subcommands: ``witt``, ``metab``, ``eigens``, ``parity``, ``dh``, ``applies``.
Reports are emitted as plain aligned text, CSV, or JSON.  Exact values never
pass through floats: rationals are serialized as ``numerator/denominator``
strings and potentially huge integers as decimal strings.

Exit status: 0 on success, 1 on usage or validation errors (single-line
diagnostic on stderr), 2 when a request exceeds the configured level cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .eigenspaces import (
    SignSignature,
    bracket_plus_dimension,
    bracket_plus_dimension_analytic,
    parity_placements,
    parity_placements_enumerated,
    sym_eigenspaces,
    sym_eigenspaces_enumerated,
)
from .ledger import (
    CoverDescription,
    CurveScenario,
    DHReport,
    LedgerRow,
    bt_poonen_applies,
    dh_crossover,
    matched_condition,
)
from .liealg import metabelian_basis, metabelian_dimension, witt_dimension

LEVEL_CAP = 512

FORMATS = ("table", "csv", "json")

DH_COLUMNS = (
    "n",
    "z_dim_upper",
    "w_dim_upper",
    "dr_dim_lower",
    "h2_budget",
    "z_plus_lower",
    "h1_upper",
    "f0_upper",
    "dr_quotient_lower",
    "verdict",
)


class CLIError(Exception):
    """Usage or validation problem; exit status 1."""


class ResourceLimitError(Exception):
    """Configured truncation exceeded; exit status 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit(2)
        raise CLIError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _int_list(text: str, expected: Optional[int] = None) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if expected is not None and len(values) != expected:
        raise argparse.ArgumentTypeError(
            f"expected {expected} comma-separated integers, got {text!r}"
        )
    return values


def _pair(text: str) -> tuple[int, ...]:
    return _int_list(text, 2)


def _triple(text: str) -> tuple[int, ...]:
    return _int_list(text, 3)


def _frac_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _check_cap(max_n: int, unsafe: bool) -> None:
    if max_n > LEVEL_CAP and not unsafe:
        raise ResourceLimitError(
            f"--max-n {max_n} exceeds the default cap {LEVEL_CAP}; "
            "pass --unsafe-max-n to override"
        )


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _render_table(columns: Sequence[str], rows: Sequence[Sequence[str]],
                  trailer: Sequence[str] = ()) -> str:
    widths = [len(c) for c in columns]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(c.ljust(widths[i]) for i, c in enumerate(columns)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    lines.extend(trailer)
    return "\n".join(lines) + "\n"


def _render_csv(columns: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    lines = [",".join(columns)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _render_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------
# dh report serialization (fixed schema, see README)

def scenario_to_json(scn: CurveScenario) -> dict:
    return {
        "genus": scn.g,
        "degree": scn.d,
        "splus": scn.s,
        "coeff_a": _frac_str(scn.coeff_a),
        "coeff_b": _frac_str(scn.coeff_b),
        "real_places": scn.signature[0],
        "complex_places": scn.signature[1],
        "max_level": scn.n_max,
    }


def scenario_from_json(obj: dict) -> CurveScenario:
    try:
        return CurveScenario(
            g=int(obj["genus"]),
            d=int(obj["degree"]),
            s=int(obj["splus"]),
            coeff_a=Fraction(obj["coeff_a"]),
            coeff_b=Fraction(obj["coeff_b"]),
            signature=(int(obj["real_places"]), int(obj["complex_places"])),
            n_max=int(obj["max_level"]),
        )
    except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise CLIError(f"malformed scenario in report: {exc}") from None


def _row_to_json(row: LedgerRow) -> dict:
    return {
        "n": row.n,
        "z_dim_upper": str(row.z_dim_upper),
        "w_dim_upper": str(row.w_dim_upper),
        "dr_dim_lower": str(row.dr_dim_lower),
        "h2_budget": _frac_str(row.h2_budget),
        "z_plus_lower": str(row.z_plus_lower),
        "h1_upper": _frac_str(row.h1_upper),
        "f0_upper": _frac_str(row.f0_upper),
        "dr_quotient_lower": _frac_str(row.dr_quotient_lower),
        "verdict": row.verdict,
    }


def report_to_json(report: DHReport) -> dict:
    return {
        "scenario": scenario_to_json(report.scenario),
        "rows": [_row_to_json(row) for row in report.rows],
        "crossover": report.crossover,
        "sustained": report.sustained,
        "viability": report.viability,
    }


def _report_rows(report: DHReport) -> list[list[str]]:
    return [[_row_to_json(row)[c] if c != "n" else str(row.n) for c in DH_COLUMNS]
            for row in report.rows]


def render_report(report: DHReport, fmt: str) -> str:
    if fmt == "json":
        return _render_json(report_to_json(report))
    rows = _report_rows(report)
    if fmt == "csv":
        return _render_csv(DH_COLUMNS, rows)
    sustained = "n/a" if report.sustained is None else str(report.sustained).lower()
    trailer = [
        f"crossover: {report.crossover if report.crossover is not None else 'none'}",
        f"sustained: {sustained}",
        f"viability: {report.viability}",
    ]
    return _render_table(DH_COLUMNS, rows, trailer)


# ---------------------------------------------------------------------------
# subcommand handlers

def _cmd_witt(args) -> int:
    _check_cap(args.max_n, args.unsafe_max_n)
    rows = [(n, witt_dimension(args.gens, n)) for n in range(1, args.max_n + 1)]
    if args.format == "json":
        obj = {
            "table": "witt",
            "generators": args.gens,
            "max_level": args.max_n,
            "rows": [{"n": n, "dimension": str(v)} for n, v in rows],
        }
        _emit(_render_json(obj), args.out)
    else:
        cells = [[str(n), str(v)] for n, v in rows]
        render = _render_csv if args.format == "csv" else _render_table
        _emit(render(("n", "dimension"), cells), args.out)
    return 0


def _format_word(indices: tuple[int, ...]) -> str:
    return ".".join(str(i) for i in indices)


def _cmd_metab(args) -> int:
    _check_cap(args.max_n, args.unsafe_max_n)
    rows = []
    for n in range(1, args.max_n + 1):
        dim = metabelian_dimension(args.gens, n)
        words = None
        if args.enumerate:
            words = [] if n == 1 else [w.indices for w in metabelian_basis(args.gens, n)]
        rows.append((n, dim, words))
    if args.format == "json":
        json_rows = []
        for n, dim, words in rows:
            entry = {"n": n, "dimension": str(dim)}
            if words is not None:
                entry["basis"] = [list(w) for w in words]
            json_rows.append(entry)
        obj = {
            "table": "metabelian",
            "generators": args.gens,
            "max_level": args.max_n,
            "rows": json_rows,
        }
        _emit(_render_json(obj), args.out)
    else:
        columns = ["n", "dimension"] + (["basis"] if args.enumerate else [])
        cells = []
        for n, dim, words in rows:
            cell = [str(n), str(dim)]
            if args.enumerate:
                cell.append(" ".join(_format_word(w) for w in words or ()))
            cells.append(cell)
        render = _render_csv if args.format == "csv" else _render_table
        _emit(render(columns, cells), args.out)
    return 0


def _cmd_eigens(args) -> int:
    _check_cap(args.max_n, args.unsafe_max_n)
    sig = SignSignature(args.plus + args.minus, args.plus)
    rows = []
    if args.mode == "sym":
        columns = ("n", "dim_plus", "dim_minus", "enum_plus", "enum_minus", "agree")
        for n in range(0, args.max_n + 1):
            plus, minus = sym_eigenspaces(sig, n)
            eplus, eminus = sym_eigenspaces_enumerated(sig, n)
            agree = (plus, minus) == (eplus, eminus)
            rows.append((n, plus, minus, eplus, eminus, agree))
    else:
        columns = ("n", "dim_plus", "analytic_plus", "total", "agree")
        for n in range(2, args.max_n + 1):
            streamed = bracket_plus_dimension(sig.m, sig.s, n)
            analytic = bracket_plus_dimension_analytic(sig.m, sig.s, n)
            total = metabelian_dimension(sig.m, n)
            rows.append((n, streamed, analytic, total, streamed == analytic))
    if args.format == "json":
        json_rows = [
            {columns[i]: (row[i] if isinstance(row[i], bool) else
                          (row[i] if columns[i] == "n" else str(row[i])))
             for i in range(len(columns))}
            for row in rows
        ]
        obj = {
            "table": "eigenspaces",
            "mode": args.mode,
            "plus_generators": args.plus,
            "minus_generators": args.minus,
            "rows": json_rows,
        }
        _emit(_render_json(obj), args.out)
    else:
        cells = [[str(v).lower() if isinstance(v, bool) else str(v) for v in row]
                 for row in rows]
        render = _render_csv if args.format == "csv" else _render_table
        _emit(render(columns, cells), args.out)
    return 0


def _cmd_parity(args) -> int:
    count = parity_placements(args.blue, args.green, args.balls)
    check = parity_placements_enumerated(args.blue, args.green, args.balls)
    if args.format == "json":
        obj = {
            "blue": args.blue,
            "green": args.green,
            "balls": args.balls,
            "even_green_placements": str(count),
            "enumerated": str(check),
            "agree": count == check,
        }
        _emit(_render_json(obj), args.out)
    else:
        columns = ("blue", "green", "balls", "even_green_placements", "enumerated", "agree")
        row = [str(args.blue), str(args.green), str(args.balls),
               str(count), str(check), str(count == check).lower()]
        render = _render_csv if args.format == "csv" else _render_table
        _emit(render(columns, [row]), args.out)
    return 0


def _first_difference(expected: dict, actual: dict) -> str:
    for key in ("scenario", "crossover", "sustained", "viability"):
        if expected.get(key) != actual.get(key):
            return key
    exp_rows = expected.get("rows", [])
    act_rows = actual.get("rows", [])
    if len(exp_rows) != len(act_rows):
        return "rows (length)"
    for i, (er, ar) in enumerate(zip(exp_rows, act_rows)):
        if er != ar:
            for column in DH_COLUMNS:
                if er.get(column) != ar.get(column):
                    return f"rows[{i}].{column}"
            return f"rows[{i}]"
    return "unknown field"


def _cmd_dh(args) -> int:
    if args.verify is not None:
        scenario_flags = [args.genus, args.degree, args.splus, args.coeff_a,
                          args.coeff_b, args.real, args.complex, args.max_n]
        if any(v is not None for v in scenario_flags):
            raise CLIError("--verify takes the scenario from the report file")
        try:
            with open(args.verify, "r", encoding="utf-8") as handle:
                stored = json.load(handle)
        except OSError as exc:
            raise CLIError(f"cannot read report: {exc}") from None
        except json.JSONDecodeError as exc:
            raise CLIError(f"malformed report JSON: {exc}") from None
        if not isinstance(stored, dict) or "scenario" not in stored:
            raise CLIError("malformed report: missing scenario")
        scn = scenario_from_json(stored["scenario"])
        recomputed = report_to_json(dh_crossover(scn))
        if recomputed != stored:
            raise CLIError(
                f"verification failed: recomputed report differs at "
                f"{_first_difference(stored, recomputed)}"
            )
        sys.stdout.write(
            f"verified: {args.verify} (rows={len(recomputed['rows'])}, "
            f"crossover={recomputed['crossover']})\n"
        )
        return 0

    required = {"--genus": args.genus, "--splus": args.splus, "--max-n": args.max_n}
    missing = [flag for flag, value in required.items() if value is None]
    if missing:
        raise CLIError(f"missing required flags: {', '.join(missing)}")
    _check_cap(args.max_n, args.unsafe_max_n)
    scn = CurveScenario(
        g=args.genus,
        d=args.degree if args.degree is not None else 1,
        s=args.splus,
        coeff_a=args.coeff_a if args.coeff_a is not None else Fraction(1),
        coeff_b=args.coeff_b if args.coeff_b is not None else Fraction(1),
        signature=(
            args.real if args.real is not None else 1,
            args.complex if args.complex is not None else 0,
        ),
        n_max=args.max_n,
    )
    report = dh_crossover(scn)
    _emit(render_report(report, args.format), args.out)
    return 0


def _cmd_applies(args) -> int:
    profiles: tuple[tuple[int, ...], ...] = ()
    if args.ram_pair is not None:
        profiles = tuple((e,) for e in args.ram_pair)
    data = CoverDescription(
        curve_genus=args.curve_genus,
        quotient_genus=args.quotient_genus,
        solvable=args.solvable,
        ramification_profiles=profiles,
        ramification_triple=args.ram_triple,
    )
    decision = bt_poonen_applies(data)
    condition = matched_condition(data)
    if condition is None:
        sys.stdout.write(f"{decision}\n")
    else:
        sys.stdout.write(f"{decision} (condition {condition})\n")
    return 0


# ---------------------------------------------------------------------------
# parser assembly

def build_parser() -> _Parser:
    parser = _Parser(prog="selmerdim", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="subcommand")

    def add_output_flags(p, with_cap=True):
        p.add_argument("--format", choices=FORMATS, default="table")
        p.add_argument("--out", metavar="PATH")
        if with_cap:
            p.add_argument("--unsafe-max-n", action="store_true",
                           help=f"lift the default --max-n cap of {LEVEL_CAP}")

    p = sub.add_parser("witt", help="free Lie algebra graded dimensions")
    p.add_argument("--gens", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    add_output_flags(p)
    p.set_defaults(handler=_cmd_witt)

    p = sub.add_parser("metab", help="metabelian graded dimensions and bases")
    p.add_argument("--gens", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--enumerate", action="store_true",
                   help="list the basis words per level")
    add_output_flags(p)
    p.set_defaults(handler=_cmd_metab)

    p = sub.add_parser("eigens", help="involution eigenspace tables, both methods")
    p.add_argument("--plus", type=int, required=True,
                   help="number of +1-eigenvalue generators")
    p.add_argument("--minus", type=int, required=True,
                   help="number of -1-eigenvalue generators")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--mode", choices=("sym", "bracket"), required=True)
    add_output_flags(p)
    p.set_defaults(handler=_cmd_eigens)

    p = sub.add_parser("parity", help="balls-in-bins even-green placement count")
    p.add_argument("--blue", type=int, required=True)
    p.add_argument("--green", type=int, required=True)
    p.add_argument("--balls", type=int, required=True)
    add_output_flags(p, with_cap=False)
    p.set_defaults(handler=_cmd_parity)

    p = sub.add_parser("dh", help="dimension-hypothesis ledger report")
    p.add_argument("--genus", type=int)
    p.add_argument("--degree", type=int, help="field degree d (default 1)")
    p.add_argument("--splus", type=int, help="count of +1-eigenvalue generators")
    p.add_argument("--coeff-a", type=_rational,
                   help="filtered-piece budget coefficient "
                        "(default 1; demonstration value, not canonical)")
    p.add_argument("--coeff-b", type=_rational,
                   help="second-cohomology budget coefficient "
                        "(default 1; demonstration value, not canonical)")
    p.add_argument("--real", type=int, help="real places of the base field (default 1)")
    p.add_argument("--complex", type=int,
                   help="complex places of the base field (default 0)")
    p.add_argument("--max-n", type=int)
    p.add_argument("--verify", metavar="PATH",
                   help="recompute a stored JSON report and confirm equality")
    add_output_flags(p)
    p.set_defaults(handler=_cmd_dh)

    p = sub.add_parser("applies", help="unramified-correspondence applicability")
    p.add_argument("--curve-genus", type=int, required=True)
    p.add_argument("--quotient-genus", type=int, required=True)
    p.add_argument("--solvable", action="store_true")
    p.add_argument("--ram-pair", type=_pair, metavar="E1,E2",
                   help="ramification indices above two distinct quotient points")
    p.add_argument("--ram-triple", type=_triple, metavar="A,B,L",
                   help="indices expected divisible by 2, 3, and an admissible prime")
    p.set_defaults(handler=_cmd_applies)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "command", None) is None:
            raise CLIError("a subcommand is required (see --help)")
        return args.handler(args)
    except CLIError as exc:
        sys.stderr.write(f"selmerdim: error: {exc}\n")
        return 1
    except ResourceLimitError as exc:
        sys.stderr.write(f"selmerdim: resource limit: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"selmerdim: error: {exc}\n")
        return 1


def entrypoint() -> None:
    sys.exit(main())
