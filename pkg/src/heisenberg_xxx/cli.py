"""Command-line front end: ``point``, ``sweep``, ``verify`` and ``loci``.

Exit codes: 0 success, 1 computation failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import analysis
from .errors import FrozenLine

NEGATIVE_CONTROL_SHIFT = 1e-3
DEFAULT_PRECISION = 15


@dataclass(frozen=True)
class OutputFormat:
    kind: str = "csv"
    precision: int = DEFAULT_PRECISION

    def number(self, x) -> str:
        if x is None:
            return ""
        return format(float(x), f".{self.precision}g")

    def json_number(self, x):
        if x is None:
            return None
        v = float(self.number(x))
        return v if math.isfinite(v) else str(v)


class UsageError(Exception):
    pass


def render_records(records, fmt: OutputFormat, include_oracle: bool = True,
                   convention: str = "sqrt") -> str:
    names = analysis.MeasureRecord.field_names(include_oracle)
    rows = []
    for rec in records:
        d = rec.as_dict(include_oracle)
        if convention == "squared":
            for k in ("F_analytic", "F_oracle"):
                if d.get(k) is not None:
                    d[k] = d[k] ** 2
        rows.append(d)
    if fmt.kind == "json":
        payload = [{k: fmt.json_number(d[k]) for k in names} for d in rows]
        return json.dumps(payload, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(names)
    for d in rows:
        writer.writerow([fmt.number(d[k]) for k in names])
    return buf.getvalue()


def parse_k_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            k = (int(lo), int(hi))
        else:
            k = (int(text), int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected K or K1..K2, got {text!r}") from None
    if k[1] < k[0]:
        raise argparse.ArgumentTypeError(f"empty k range {text!r}")
    return k


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                        help="significant digits for numbers (default 15)")
    common.add_argument("--out", default=None, help="write to this path instead of stdout")

    records = argparse.ArgumentParser(add_help=False)
    records.add_argument("--format", choices=("csv", "json"), default="csv")
    records.add_argument("--no-oracle", dest="include_oracle", action="store_false",
                         help="omit the numerically computed columns")
    records.add_argument("--fidelity-convention", choices=("sqrt", "squared"), default="sqrt")
    records.add_argument("--boundary", choices=("periodic", "open"), default="periodic",
                         help="chain boundary used by the numerical oracle")

    parser = argparse.ArgumentParser(
        prog="heisenberg-xxx",
        description="Exact dynamics of the four-qubit XXX chain with next-nearest coupling alpha.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("point", parents=[common, records], help="all diagnostics at one (alpha, t)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--t", type=float, required=True)

    s = sub.add_parser("sweep", parents=[common, records], help="diagnostics over an (alpha, t) grid")
    g = analysis.SweepGrid()
    s.add_argument("--alpha-min", type=float, default=g.alpha_min)
    s.add_argument("--alpha-max", type=float, default=g.alpha_max)
    s.add_argument("--alpha-steps", type=int, default=g.alpha_steps)
    s.add_argument("--t-min", type=float, default=g.t_min)
    s.add_argument("--t-max", type=float, default=g.t_max)
    s.add_argument("--t-steps", type=int, default=g.t_steps)
    s.add_argument("--workers", type=int, default=1, help="processes for grid evaluation")

    v = sub.add_parser("verify", parents=[common], help="recompute the reference table")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--negative-control", action="store_true",
                   help=f"shift alpha by {NEGATIVE_CONTROL_SHIFT:g} in the numerical route; must FAIL")

    lo = sub.add_parser("loci", parents=[common], help="times of maximal sensitivity and extrema")
    lo.add_argument("--alpha", type=float, required=True)
    lo.add_argument("--k", type=parse_k_range, default=(0, 3), help="K or K1..K2 (default 0..3)")
    lo.add_argument("--format", choices=("text", "csv", "json"), default="text")
    return parser


def cmd_point(args) -> str:
    fmt = OutputFormat(args.format, args.precision)
    rec = analysis.evaluate_point(args.alpha, args.t, args.include_oracle, args.boundary)
    return render_records([rec], fmt, args.include_oracle, args.fidelity_convention)


def cmd_sweep(args) -> str:
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    try:
        grid = analysis.SweepGrid(args.alpha_min, args.alpha_max, args.alpha_steps,
                                  args.t_min, args.t_max, args.t_steps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fmt = OutputFormat(args.format, args.precision)
    recs = analysis.sweep(grid, args.include_oracle, args.boundary, args.workers)
    return render_records(recs, fmt, args.include_oracle, args.fidelity_convention)


def _verify_json(report: analysis.TableReport, fmt: OutputFormat) -> str:
    n = fmt.json_number
    payload = {
        "passed": report.passed,
        "tolerance": report.tolerance,
        "max_rel_error": n(report.max_rel_error),
        "rows": [{
            "label": r.label, "alpha": r.alpha, "t": n(r.t), "phi": n(r.phi),
            "passed": r.passed, "max_rel_error": n(r.max_rel_error),
            "checks": [{
                "quantity": c.name, "analytic": n(c.analytic), "oracle": n(c.oracle),
                "closed_form": n(c.closed_form), "printed": c.printed,
                "rel_error": n(c.rel_error), "closed_form_ok": c.closed_form_ok,
                "printed_ok": c.printed_ok, "oracle_ok": c.oracle_ok, "passed": c.passed,
            } for c in r.checks],
        } for r in report.rows],
    }
    return json.dumps(payload, indent=1) + "\n"


def _verify_text(report: analysis.TableReport, fmt: OutputFormat) -> str:
    lines = [f"{'row':<11} {'qty':<4} {'analytic':>18} {'oracle':>18} {'printed':>12} {'rel.err':>10}  status"]
    for r in report.rows:
        for c in r.checks:
            lines.append(f"{r.label:<11} {c.name:<4} {fmt.number(c.analytic):>18} {fmt.number(c.oracle):>18} "
                         f"{c.printed:>12} {c.rel_error:>10.2e}  {'ok' if c.passed else 'FAIL'}")
    lines.append(f"max analytic-vs-oracle relative error: {report.max_rel_error:.3e} "
                 f"(tolerance {report.tolerance:g})")
    if report.passed:
        lines.append("PASS")
    else:
        lines.append("FAIL: " + ", ".join(report.failing_rows()))
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[str, int]:
    shift = NEGATIVE_CONTROL_SHIFT if args.negative_control else 0.0
    report = analysis.verify_table(oracle_alpha_shift=shift)
    fmt = OutputFormat(args.format, args.precision)
    text = _verify_json(report, fmt) if args.format == "json" else _verify_text(report, fmt)
    return text, 0 if report.passed else 1


def cmd_loci(args) -> str:
    fmt = OutputFormat(args.format, args.precision)
    try:
        loci = analysis.sensitivity_loci(args.alpha, args.k)
    except FrozenLine:
        if args.format == "json":
            return json.dumps({"alpha": args.alpha, "frozen": True, "loci": []}) + "\n"
        return "frozen line: no finite loci (alpha = -1 keeps phi = 0 for all t)\n"
    rows = [(kind, k, ls.phases[i], ls.times[i])
            for kind, ls in loci.items()
            for i, k in enumerate(range(args.k[0], args.k[1] + 1))]
    if args.format == "json":
        return json.dumps({
            "alpha": args.alpha, "frozen": False,
            "loci": [{"kind": kind, "k": k, "phi": fmt.json_number(p), "t": fmt.json_number(t)}
                     for kind, k, p, t in rows],
        }, indent=1) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kind", "k", "phi", "t"])
        for kind, k, p, t in rows:
            w.writerow([kind, k, fmt.number(p), fmt.number(t)])
        return buf.getvalue()
    out = [f"alpha = {fmt.number(args.alpha)}"]
    titles = {
        "max_sensitivity": "max sensitivity, phi = pi/4 + k pi/2",
        "max_sensitivity_consistent": "max slope of sin^2(phi/2), phi = pi/2 + k pi",
        "extremum": "extrema, phi = k pi",
    }
    for kind, ls in loci.items():
        out.append(titles[kind])
        for k, p, t in zip(range(args.k[0], args.k[1] + 1), ls.phases, ls.times):
            out.append(f"  k={k:<4d} phi={fmt.number(p):<20} t={fmt.number(t)}")
    return "\n".join(out) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.precision < 1 or args.precision > 17:
        parser.error("--precision must be between 1 and 17")
    code = 0
    try:
        if args.command == "point":
            text = cmd_point(args)
        elif args.command == "sweep":
            text = cmd_sweep(args)
        elif args.command == "verify":
            text, code = cmd_verify(args)
        else:
            text = cmd_loci(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (ArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(text, args.out)
    return code
