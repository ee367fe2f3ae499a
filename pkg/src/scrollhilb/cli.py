"""Command-line front end.

Subcommands:

* ``classify`` -- component list for one (d, g, h1)
* ``scan``     -- grid scan over genus/speciality ranges with a degree policy
* ``gonal``    -- gonal-curve component record, or the minimal g = 3l + 4 family
* ``project``  -- projected-family dimension bounds and the divisor case

Exit codes: 0 success, 2 invalid input (diagnostic on stderr), 3 internal
cross-check failure under ``--verify``, 1 reserved for unexpected faults.
Output is byte-deterministic: same flags, same bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import components as comp
from . import gonal as gonalmod
from . import oracle
from . import projections as proj
from .errors import InvalidParameters
from .scroll import ScrollParams, min_degree_threshold

COMPONENT_COLUMNS = [
    "kind", "d", "g", "h1", "m", "t", "l", "dim",
    "generically_smooth", "bundle_class", "notes",
]

GONAL_COLUMNS = [
    "g", "t", "l", "d", "a", "m", "R", "gonal_locus_dim", "dim_z",
    "dim_h_formula", "h_component_exists", "difference", "kk_equality",
    "equidimensional_with_general_moduli", "not_contained_in_general_moduli",
    "family_19608",
]

PROJECT_COLUMNS = [
    "d", "g", "l", "k", "m", "r", "y_dim_lower_bound", "is_divisor_case",
    "h_dim", "y_dim", "y_vs_target_difference", "y_vs_nonspecial_difference",
    "new_component_certified",
]


def _cell(value) -> str:
    """CSV cell rendering: integers in decimal, booleans as true/false,
    absent fields empty (not zero)."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _emit_csv(stdout, columns: list[str], rows: list[dict]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf)  # RFC-4180 quoting and CRLF line ends
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    stdout.write(buf.getvalue())


def _emit_json(stdout, doc) -> None:
    stdout.write(json.dumps(doc, indent=2))
    stdout.write("\n")


def _component_row(report: comp.ClassificationReport, rec: comp.ComponentRecord) -> dict:
    anchored = [
        n.text
        for n in report.notes
        if n.m == rec.m and n.t == rec.t and n.l == rec.l
    ]
    return {
        "kind": rec.kind.value,
        "d": rec.d,
        "g": rec.g,
        "h1": rec.h1,
        "m": rec.m,
        "t": rec.t,
        "l": rec.l,
        "dim": rec.dim,
        "generically_smooth": rec.generically_smooth,
        "bundle_class": rec.bundle_class.value if rec.bundle_class else None,
        "notes": anchored,
    }


def _component_csv_rows(report: comp.ClassificationReport) -> list[dict]:
    rows = []
    for rec in report.components:
        row = _component_row(report, rec)
        row["notes"] = "; ".join(row["notes"])
        rows.append(row)
    return rows


def _report_doc(report: comp.ClassificationReport) -> dict:
    p = report.params
    return {
        "params": {"d": p.d, "g": p.g, "h1": p.h1, "R": p.R},
        "components": [_component_row(report, rec) for rec in report.components],
        "reducible": report.reducible,
        "equidimensional": report.equidimensional,
        "complete": report.complete,
        "notes": [
            {"code": n.code, "text": n.text}
            for n in report.notes
            if n.m is None and n.t is None and n.l is None
        ],
    }


def _verify_report(report: comp.ClassificationReport, stderr) -> bool:
    """Recompute every component dimension via the parameter-count oracle."""
    ok = True
    for rec in report.components:
        if rec.kind is comp.ComponentKind.GENERAL_MODULI:
            check = oracle.dim_via_parameter_count(report.params, rec.m)
        else:
            gp = gonalmod.GonalParams(g=rec.g, t=rec.t, l=rec.l, d=rec.d)
            check = oracle.z_dim_via_parameter_count(gp)
        if check != rec.dim:
            ok = False
            stderr.write(
                f"verify: mismatch at (d={rec.d}, g={rec.g}, h1={rec.h1}, "
                f"m={rec.m}): closed form {rec.dim}, parameter count {check}\n"
            )
    return ok


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise ValueError(f"empty range {text}")
    return lo, hi


def _degrees_for(policy: str, g: int, h1: int) -> list[int]:
    threshold = min_degree_threshold(g, h1)
    if policy == "min":
        return [threshold]
    if policy.startswith("+"):
        return [threshold + int(policy[1:])]
    return sorted({int(s) for s in policy.split(",")})


def cmd_classify(args, stdout, stderr) -> int:
    p = ScrollParams(args.d, args.g, args.h1)
    report = comp.classify(p, include_gonal=args.gonal)
    if args.verify and not _verify_report(report, stderr):
        return 3
    if args.format == "csv":
        _emit_csv(stdout, COMPONENT_COLUMNS, _component_csv_rows(report))
    else:
        _emit_json(stdout, _report_doc(report))
    return 0


def cmd_scan(args, stdout, stderr) -> int:
    try:
        g_lo, g_hi = _parse_range(args.g)
        h1_lo, h1_hi = _parse_range(args.h1)
    except ValueError as exc:
        stderr.write(f"malformed-range: {exc}\n")
        return 2

    rows: list[dict] = []
    reports: list[comp.ClassificationReport] = []
    for g in range(g_lo, g_hi + 1):
        for h1 in range(h1_lo, h1_hi + 1):
            if h1 <= 0 or h1 >= g:
                continue
            try:
                degrees = _degrees_for(args.d, g, h1)
            except ValueError as exc:
                stderr.write(f"malformed-degree-policy: {exc}\n")
                return 2
            for d in degrees:
                try:
                    p = ScrollParams(d, g, h1)
                    report = comp.classify(p, include_gonal=args.gonal)
                except InvalidParameters:
                    continue  # grid cells without components are skipped
                reports.append(report)
                rows.extend(
                    _component_csv_rows(report)
                    if args.format == "csv"
                    else [_component_row(report, rec) for rec in report.components]
                )

    if args.verify:
        for report in reports:
            if not _verify_report(report, stderr):
                return 3

    if args.format == "csv":
        _emit_csv(stdout, COMPONENT_COLUMNS, rows)
    else:
        _emit_json(stdout, {"rows": rows})
    return 0


def cmd_gonal(args, stdout, stderr) -> int:
    if args.family_19608:
        gp = gonalmod.rem19608_family(args.l)
    else:
        missing = [k for k in ("g", "t", "d") if getattr(args, k) is None]
        if missing:
            stderr.write(f"missing-flags: --{' --'.join(missing)} required\n")
            return 2
        gp = gonalmod.GonalParams(g=args.g, t=args.t, l=args.l, d=args.d)

    dim_z = gonalmod.z_component_dimension(gp)
    dim_h = gonalmod.h_component_dimension_at_gonal_m(gp, require_existence=False)
    diff = gonalmod.z_vs_h_difference(gp)
    kk_equality = (
        gp.l * gp.t * (gp.t - 1) == 2 * gp.g - (gp.t - 1) - gp.t * (gp.t - 1)
    )
    record = {
        "g": gp.g,
        "t": gp.t,
        "l": gp.l,
        "d": gp.d,
        "a": gp.a,
        "m": gp.m,
        "R": gp.R,
        "gonal_locus_dim": gonalmod.gonal_locus_dimension(gp.g, gp.t),
        "dim_z": dim_z,
        "dim_h_formula": dim_h,
        "h_component_exists": gp.g >= 4 * gp.l,
        "difference": diff,
        "kk_equality": kk_equality,
        "equidimensional_with_general_moduli": (diff == 0) if gp.l == 2 else None,
        "not_contained_in_general_moduli": (diff >= 0) if gp.l >= 3 else None,
        "family_19608": bool(args.family_19608),
    }

    if args.verify:
        check = oracle.z_dim_via_parameter_count(gp)
        if check != dim_z:
            stderr.write(
                f"verify: mismatch at Z(t={gp.t}, l={gp.l}): closed form "
                f"{dim_z}, parameter count {check}\n"
            )
            return 3

    if args.format == "csv":
        _emit_csv(stdout, GONAL_COLUMNS, [record])
    else:
        _emit_json(stdout, record)
    return 0


def cmd_project(args, stdout, stderr) -> int:
    pp = proj.ProjectionParams(d=args.d, g=args.g, l=args.l, k=args.k, m=args.m)
    y_lb = proj.y_dim_lower_bound(pp)
    is_divisor = pp.l == 1 and pp.k == 0 and pp.m == 2 * pp.g - 2
    record = {
        "d": pp.d,
        "g": pp.g,
        "l": pp.l,
        "k": pp.k,
        "m": pp.m,
        "r": pp.r,
        "y_dim_lower_bound": y_lb,
        "is_divisor_case": is_divisor,
        "h_dim": None,
        "y_dim": None,
        "y_vs_target_difference": None,
        "y_vs_nonspecial_difference": None,
        "new_component_certified": None,
    }
    if is_divisor:
        dims = proj.divisor_case(pp.d, pp.g)
        record["h_dim"] = dims.h_dim
        record["y_dim"] = dims.y_dim
    else:
        diff = proj.y_vs_target_difference(pp)
        record["y_vs_target_difference"] = diff
        if pp.k == 0:
            margin = proj.y_vs_nonspecial_difference(pp)
            record["y_vs_nonspecial_difference"] = margin
            record["new_component_certified"] = margin >= 0
        else:
            record["new_component_certified"] = diff > 0

    if args.verify and is_divisor and record["y_dim"] != y_lb:
        stderr.write(
            f"verify: divisor-case mismatch: lower bound {y_lb}, "
            f"exact dimension {record['y_dim']}\n"
        )
        return 3

    if args.format == "csv":
        _emit_csv(stdout, PROJECT_COLUMNS, [record])
    else:
        _emit_json(stdout, record)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scrollhilb",
        description="Components of the Hilbert scheme of smooth special scrolls",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--verify", action="store_true",
                        help="cross-check dimensions against the parameter-count oracle")

    sp = sub.add_parser("classify", help="components for one (d, g, h1)")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--h1", type=int, required=True)
    sp.add_argument("--gonal", action="store_true",
                    help="append gonal-curve components of the same speciality")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("scan", help="grid scan over genus/speciality ranges")
    sp.add_argument("--g", required=True, help="range A..B (inclusive) or single value")
    sp.add_argument("--h1", required=True, help="range A..B (inclusive) or single value")
    sp.add_argument("--d", required=True,
                    help="degree policy: 'min' (threshold), '+K' (threshold offset), "
                         "or explicit comma-separated list")
    sp.add_argument("--gonal", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("gonal", help="gonal-curve component record")
    sp.add_argument("--g", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--d", type=int)
    sp.add_argument("--family-19608", action="store_true", dest="family_19608",
                    help="the minimal family t=3, g=3l+4, d=6g-5")
    common(sp)
    sp.set_defaults(func=cmd_gonal)

    sp = sub.add_parser("project", help="projected-family dimension bounds")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_project)

    return parser


def run(argv: list[str], stdout, stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args, stdout, stderr)
    except InvalidParameters as exc:
        stderr.write(f"{exc}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:], sys.stdout, sys.stderr))


if __name__ == "__main__":
    main()
