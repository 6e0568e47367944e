"""Command-line front end.

Usage::

    diracgeom solve --p 0 0 1 --m 1 --format json
    diracgeom verify --seed 42 --draws 100
    diracgeom bloch-export --p-min 0 --p-max 10 --steps 21 --m 1 --format csv
    diracgeom boost --p 0 0 0 --m 1 --phi 0.7853981633974483

Exit codes: 0 success, 1 verification failure, 2 bad arguments,
3 light-speed singularity in ``boost``.
"""
from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import dirac
from .errors import LightSpeedSingularityError
from .records import (
    SOLUTION_CSV_HEADER,
    envelope,
    fmt,
    solution_record,
    to_csv,
    to_json,
    to_table,
)
from .verify import run_verification

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_SINGULAR = 0, 1, 2, 3
SOLUTION_TAGS = ("pos_hplus", "pos_hminus", "neg_hplus", "neg_hminus")


def _render_solutions(records, fmt_name: str) -> str:
    if fmt_name == "csv":
        return to_csv(SOLUTION_CSV_HEADER, [r.csv_row() for r in records])
    return to_table(SOLUTION_CSV_HEADER, [r.csv_row(digits=8) for r in records])


def cmd_solve(args) -> tuple[int, str]:
    sols = dirac.solve(args.p, args.m)
    records = [solution_record(s) for s in sols]
    if args.format == "json":
        inputs = {"p": list(args.p), "m": args.m}
        return EXIT_OK, to_json(envelope("solve", inputs, [r.to_dict() for r in records]))
    return EXIT_OK, _render_solutions(records, args.format)


VERIFY_HEADER = ["check_name", "draws", "max_residual", "tolerance", "passed"]


def cmd_verify(args) -> tuple[int, str]:
    reports = run_verification(args.seed, args.draws, args.tolerance_override)
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED
    if args.format == "json":
        inputs = {"seed": args.seed, "draws": args.draws, "tolerance_override": args.tolerance_override}
        return code, to_json(envelope("verify", inputs, [r.to_dict() for r in reports]))
    rows = [
        [r.check_name, str(r.draws), fmt(r.max_residual, 6), fmt(r.tolerance, 3), "PASS" if r.passed else "FAIL"]
        for r in reports
    ]
    render = to_csv if args.format == "csv" else to_table
    return code, render(VERIFY_HEADER, rows)


def bloch_rows(p_min: float, p_max: float, steps: int, m: float) -> list[dict]:
    """Geometry of the four solutions for momenta along k from p_min to p_max."""
    rows = []
    for p in np.linspace(p_min, p_max, steps):
        p = float(p)
        s_plus, _ = dirac.s_vectors(p, m)
        sols = dirac.solve([0.0, 0.0, p], m)
        entries = []
        for tag, sol in zip(SOLUTION_TAGS, sols):
            rec = solution_record(sol)
            entries.append({
                "tag": tag,
                "helicity": rec.helicity,
                "energy_sign": rec.energy_sign,
                "bloch_r": list(rec.bloch_r),
                "quadrant": rec.quadrant,
            })
        rows.append({
            "p": p,
            "theta": math.atan2(p, m),
            "s_plus": [float(x) for x in s_plus],
            "solutions": entries,
        })
    return rows


BLOCH_CSV_HEADER = ["p", "theta", "s_plus_x", "s_plus_y", "s_plus_z"] + [
    f"{tag}_{field}" for tag in SOLUTION_TAGS for field in ("r_x", "r_y", "r_z", "quadrant")
]


def cmd_bloch_export(args) -> tuple[int, str]:
    rows = bloch_rows(args.p_min, args.p_max, args.steps, args.m)
    if args.format == "json":
        inputs = {"p_min": args.p_min, "p_max": args.p_max, "steps": args.steps, "m": args.m}
        return EXIT_OK, to_json(envelope("bloch-export", inputs, rows))
    flat = []
    for row in rows:
        line = [fmt(row["p"]), fmt(row["theta"]), *(fmt(x) for x in row["s_plus"])]
        for e in row["solutions"]:
            line += [*(fmt(x) for x in e["bloch_r"]), e["quadrant"]]
        flat.append(line)
    return EXIT_OK, to_csv(BLOCH_CSV_HEADER, flat)


def cmd_boost(args) -> tuple[int, str]:
    sols = dirac.solve(args.p, args.m)
    before = next(s for s in sols if s.energy_sign == 1 and s.helicity_sign == args.helicity)
    after = dirac.boost_via_rotation(before, args.phi)
    records = [solution_record(before), solution_record(after)]
    if args.format == "json":
        inputs = {"p": list(args.p), "m": args.m, "phi": args.phi, "helicity": args.helicity}
        return EXIT_OK, to_json(envelope("boost", inputs, [r.to_dict() for r in records]))
    text = _render_solutions(records, args.format)
    if args.format == "table":
        text = f"rotation angle phi = {fmt(args.phi)} (rows: before, after)\n" + text
    return EXIT_OK, text


def _positive(name):
    def parse(text):
        value = float(text)
        if not value > 0.0 or not math.isfinite(value):
            raise argparse.ArgumentTypeError(f"{name} must be a positive finite number")
        return value
    return parse


def _finite(text):
    value = float(text)
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError("value must be finite")
    return value


def _at_least(lo):
    def parse(text):
        value = int(text)
        if value < lo:
            raise argparse.ArgumentTypeError(f"must be at least {lo}")
        return value
    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diracgeom", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="four plane-wave Dirac solutions for momentum p")
    p.add_argument("--p", nargs=3, type=_finite, required=True, metavar=("PX", "PY", "PZ"))
    p.add_argument("--m", type=_positive("--m"), required=True)
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run every invariant suite")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--draws", type=_at_least(1), default=100)
    p.add_argument("--tolerance-override", type=_positive("--tolerance-override"), default=None)
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bloch-export", help="Bloch-plane geometry over a momentum range")
    p.add_argument("--p-min", type=_finite, required=True)
    p.add_argument("--p-max", type=_finite, required=True)
    p.add_argument("--steps", type=_at_least(2), required=True)
    p.add_argument("--m", type=_positive("--m"), required=True)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.set_defaults(func=cmd_bloch_export)

    p = sub.add_parser("boost", help="rotate a solution's r-space factor and read off the boosted plane wave")
    p.add_argument("--p", nargs=3, type=_finite, required=True, metavar=("PX", "PY", "PZ"))
    p.add_argument("--m", type=_positive("--m"), required=True)
    p.add_argument("--phi", type=_finite, required=True)
    p.add_argument("--helicity", type=int, choices=(1, -1), default=1)
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.set_defaults(func=cmd_boost)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bloch-export" and not 0.0 <= args.p_min < args.p_max:
        parser.error("bloch-export needs 0 <= --p-min < --p-max")
    try:
        code, text = args.func(args)
    except LightSpeedSingularityError as exc:
        print(f"diracgeom: light-speed singularity: {exc}", file=sys.stderr)
        print("the rotated kinematic vector sits on the massless boundary between the "
              "particle and antiparticle branches; choose a different --phi", file=sys.stderr)
        return EXIT_SINGULAR
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
