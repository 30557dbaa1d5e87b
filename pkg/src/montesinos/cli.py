"""Command-line front-end: slope tables, classification, theorem sweep."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .enumeration import SeifertUnavailable, seifert_system
from .knots import (
    KnotError,
    canonical_form,
    format_knot,
    is_hyperbolic,
    is_one_one,
    parse,
    pretzel_torus_check,
    to_pretzel,
)
from .surface import GUARANTEED, CandidateSurface, SlopeReport, slope_report

__all__ = ["main"]


def _frac_str(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _rc_str(rc: tuple[int, ...] | None) -> str:
    if rc is None:
        return "-"
    return "(" + ",".join(str(r) for r in rc) + ")"


def _tri_str(value: bool | None) -> str:
    if value is None:
        return "unknown"
    return "true" if value else "false"


def _surface_row(s: CandidateSurface) -> dict:
    slope = s.slope if s.slope is not None else s.twist
    return {
        "slope": _frac_str(slope),
        "euler": s.euler if s.euler is not None else "-",
        "r_cycle": _rc_str(s.r_cycle),
        "incompressibility": s.incompressibility,
        "seifert": s.seifert,
        "sheets": s.sheets,
        "system_kind": s.kind,
    }


def _selected_surfaces(report: SlopeReport, include_unknown: bool):
    return [
        s
        for s in report.surfaces
        if include_unknown or s.seifert or s.incompressibility == GUARANTEED
    ]


def _predicates(knot) -> dict:
    qs = to_pretzel(knot)
    return {
        "hyperbolic": is_hyperbolic(knot),
        "one_one": is_one_one(knot),
        "torus": pretzel_torus_check(qs) if qs is not None else None,
        "pretzel": list(qs) if qs is not None else None,
    }


def _canonical_doc(knot) -> dict:
    total, vec = canonical_form(knot)
    return {"sum": _frac_str(total), "vector": [_frac_str(t) for t in vec]}


def _emit_table(rows: list[dict], out) -> None:
    headers = ["slope", "euler", "r_cycle", "incompressibility", "seifert", "sheets", "system_kind"]
    rendered = [
        {h: ("yes" if row[h] is True else "no" if row[h] is False else str(row[h])) for h in headers}
        for row in rows
    ]
    widths = {h: max(len(h), *(len(r[h]) for r in rendered)) if rendered else len(h) for h in headers}
    print("  ".join(h.ljust(widths[h]) for h in headers), file=out)
    for r in rendered:
        print("  ".join(r[h].ljust(widths[h]) for h in headers), file=out)


def _emit_csv(rows: list[dict], out) -> None:
    headers = ["slope", "euler", "r_cycle", "incompressibility", "seifert", "sheets", "system_kind"]
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow(
            [
                row["slope"],
                row["euler"],
                row["r_cycle"],
                row["incompressibility"],
                "true" if row["seifert"] else "false",
                row["sheets"],
                row["system_kind"],
            ]
        )


def cmd_slopes(args, out) -> int:
    knot = parse(args.knot)
    report = slope_report(knot)
    rows = [_surface_row(s) for s in _selected_surfaces(report, args.include_unknown_incompressibility)]
    if args.format == "json":
        doc = {
            "knot": format_knot(knot),
            "canonical": _canonical_doc(knot),
            "predicates": _predicates(knot),
            "seifert_twist": _frac_str(report.seifert_twist) if report.seifert_twist is not None else None,
            "slope_basis": "seifert" if report.seifert_twist is not None else "twist-only",
            "surfaces": rows,
        }
        print(json.dumps(doc, indent=2), file=out)
        return 0
    if not args.quiet:
        print(f"# knot {format_knot(knot)}", file=out)
        if report.seifert_twist is not None:
            print(f"# seifert twist {_frac_str(report.seifert_twist)}", file=out)
        else:
            print(f"# no seifert baseline ({report.seifert_note}); slopes are twist numbers", file=out)
    if args.format == "csv":
        _emit_csv(rows, out)
    else:
        _emit_table(rows, out)
    return 0


def cmd_classify(args, out) -> int:
    knot = parse(args.knot)
    canonical = _canonical_doc(knot)
    predicates = _predicates(knot)
    if args.format == "json":
        doc = {"knot": format_knot(knot), "canonical": canonical, "predicates": predicates}
        print(json.dumps(doc, indent=2), file=out)
        return 0
    vector = "(" + ",".join(canonical["vector"]) + ")"
    pretzel = predicates["pretzel"]
    lines = [
        ("knot", format_knot(knot)),
        ("canonical_sum", canonical["sum"]),
        ("canonical_vector", vector),
        ("pretzel", "(" + ",".join(str(q) for q in pretzel) + ")" if pretzel else "none"),
        ("torus", _tri_str(predicates["torus"])),
        ("hyperbolic", _tri_str(predicates["hyperbolic"])),
        ("one_one", _tri_str(predicates["one_one"])),
    ]
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow([k for k, _ in lines])
        writer.writerow([v for _, v in lines])
    else:
        for key, value in lines:
            print(f"{key}: {value}", file=out)
    return 0


def cmd_seifert(args, out) -> int:
    knot = parse(args.knot)
    system, tw = seifert_system(knot.tangles)
    paths = [
        [repr(seg.origin) for seg in path.segments] + [repr(path.segments[-1].toward)]
        for path in system.paths
    ]
    penultimates = [int(path.segments[-1].origin.slope) for path in system.paths]
    if args.format == "json":
        doc = {
            "knot": format_knot(knot),
            "seifert_twist": _frac_str(tw),
            "paths": paths,
            "penultimate_vertices": penultimates,
        }
        print(json.dumps(doc, indent=2), file=out)
        return 0
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["knot", "seifert_twist", "paths", "penultimate_vertices"])
        writer.writerow(
            [
                format_knot(knot),
                _frac_str(tw),
                "|".join(" -> ".join(route) for route in paths),
                ",".join(str(m) for m in penultimates),
            ]
        )
        return 0
    print(f"knot: {format_knot(knot)}", file=out)
    print(f"seifert_twist: {_frac_str(tw)}", file=out)
    for i, route in enumerate(paths):
        print(f"path {i + 1}: " + " -> ".join(route), file=out)
    print("penultimate_vertices: (" + ",".join(str(m) for m in penultimates) + ")", file=out)
    return 0


def _rotations(rc: tuple[int, ...]):
    return [rc[i:] + rc[:i] for i in range(len(rc))]


def cmd_verify_theorem(args, out) -> int:
    failures = 0
    for n in range(3, args.n_max + 1, 2):
        knot = parse(f"P(2,-3,{n})")
        report = slope_report(knot)
        want_slope = Fraction(2 * (n - 1) ** 2, n)
        want_rc = (1 - n, -1, -1)
        hits = [
            s
            for s in report.surfaces
            if s.slope == want_slope
            and s.euler == -n
            and s.r_cycle is not None
            and s.r_cycle in _rotations(want_rc)
            and s.incompressibility == GUARANTEED
        ]
        ok = bool(hits) and is_hyperbolic(knot) is True and is_one_one(knot) is True
        status = "PASS" if ok else "FAIL"
        if not ok:
            failures += 1
        if not args.quiet or not ok:
            print(
                f"n={n} {status} slope={_frac_str(want_slope)} euler={-n} "
                f"found={len(hits)}",
                file=out,
            )
    print(f"verify-theorem: {'PASS' if failures == 0 else 'FAIL'}", file=out)
    return 0 if failures == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "csv", "json"], default="table")
    common.add_argument(
        "--include-unknown-incompressibility",
        action="store_true",
        help="also list surfaces the r-cycle filter cannot certify",
    )
    common.add_argument("--quiet", action="store_true", help="suppress comment lines")
    common.add_argument(
        "--threads",
        type=int,
        default=1,
        help="performance knob; output is deterministic regardless",
    )
    parser = argparse.ArgumentParser(
        prog="montesinos",
        description="Boundary slopes of candidate essential surfaces in Montesinos knot exteriors",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("slopes", parents=[common], help="candidate-surface table")
    p.add_argument("knot")
    p.set_defaults(fn=cmd_slopes)
    p = sub.add_parser("classify", parents=[common], help="canonical form and predicates")
    p.add_argument("knot")
    p.set_defaults(fn=cmd_classify)
    p = sub.add_parser("seifert", parents=[common], help="Seifert baseline system")
    p.add_argument("knot")
    p.set_defaults(fn=cmd_seifert)
    p = sub.add_parser(
        "verify-theorem",
        parents=[common],
        help="check the known slope family of the (2,-3,n) pretzel knots",
    )
    p.add_argument("--n-max", type=int, default=21)
    p.set_defaults(fn=cmd_verify_theorem)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, sys.stdout)
    except (KnotError, SeifertUnavailable, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
