"""Command-line front end for the experiment runners."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, fields

from . import experiments as ex
from .fp import is_prime
from .groebner import BudgetExceeded

SUBCOMMANDS = ("socle-growth", "tor-growth", "thm32", "remark25", "codim-bounds", "chi-inf",
               "regular-check")
CSV_COLUMNS = ["scenario", "claim_id", "p", "n", "q", "value", "scaling_dim", "ratio_num",
               "ratio_den", "assert", "pass"]


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    subcommand: str
    p: int = 2
    n_max: int | None = None
    t: int = 3
    order: str = "grevlex"
    format: str = "csv"
    out: str | None = None
    verify: bool = True
    budget: int = ex.DEFAULT_BOX
    max_pairs: int | None = None

    def validate(self):
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        if not isinstance(self.p, int) or not is_prime(self.p) or self.p > 2**31 - 1:
            raise UsageError(f"p={self.p} is not a prime")
        if self.n_max is not None and self.n_max < 0:
            raise UsageError("n_max must be >= 0")
        if self.t < 1:
            raise UsageError("t must be >= 1")
        if self.order not in ("grevlex", "lex"):
            raise UsageError(f"unknown order {self.order!r}")
        if self.format not in ("csv", "json"):
            raise UsageError(f"unknown format {self.format!r}")
        if self.budget <= 0 or (self.max_pairs is not None and self.max_pairs <= 0):
            raise UsageError("budget must be positive")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="froblab", description="Frobenius length experiments over F_p.")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--p", type=int)
        sp.add_argument("--n-max", dest="n_max", type=int)
        sp.add_argument("--t", type=int, help="number of X_i Y_i pairs")
        sp.add_argument("--order", choices=["grevlex", "lex"])
        sp.add_argument("--format", choices=["csv", "json"])
        sp.add_argument("--out")
        sp.add_argument("--verify", action=argparse.BooleanOptionalAction, default=None,
                        help="run the second, independent route for each quantity")
        sp.add_argument("--budget", type=int, help="largest admissible monomial box")
        sp.add_argument("--max-pairs", dest="max_pairs", type=int,
                        help="S-pair cap per Groebner basis run")
        sp.add_argument("--config", help="JSON file with CliConfig fields")
    return parser


def load_config(argv) -> CliConfig:
    args = build_parser().parse_args(argv)
    cfg = CliConfig(args.subcommand)
    env = os.environ.get("FROBLAB_BUDGET")
    if env is not None:
        try:
            cfg.budget = int(env)
        except ValueError:
            raise UsageError(f"FROBLAB_BUDGET={env!r} is not an integer")
    if args.config:
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"cannot read config: {e}")
        known = {f.name for f in fields(CliConfig)} - {"subcommand"}
        extra = set(data) - known
        if extra:
            raise UsageError(f"unknown config keys: {sorted(extra)}")
        for k, v in data.items():
            setattr(cfg, k, v)
    for f in fields(CliConfig):
        v = getattr(args, f.name, None)
        if f.name != "subcommand" and v is not None:
            setattr(cfg, f.name, v)
    cfg.validate()
    return cfg


def run(cfg: CliConfig) -> ex.ExperimentReport:
    budget = ex.Budget(cfg.budget, cfg.max_pairs)
    kw = dict(n_max=cfg.n_max, verify=cfg.verify, budget=budget, order=cfg.order)
    if cfg.subcommand == "remark25":
        return ex.exp_remark25(cfg.t, cfg.p, **kw)
    return ex.RUNNERS[cfg.subcommand](cfg.p, **kw)


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def to_csv(report: ex.ExperimentReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in report.rows:
        rec = r.record()
        w.writerow([_cell(rec[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def to_json(report: ex.ExperimentReport) -> str:
    summary = {
        "scenario": report.scenario,
        "assertions": len(report.assertions),
        "passed": sum(1 for r in report.assertions if r.passed),
        "failed": len(report.failures),
        "partial": report.partial,
        "notes": report.notes,
        "wall_seconds": {k: round(v, 6) for k, v in report.wall.items()},
    }
    return json.dumps({"rows": [r.record() for r in report.rows], "summary": summary}, indent=2) + "\n"


def table(report: ex.ExperimentReport) -> str:
    lines = []
    for name, s in report.series.items():
        lines.append(f"{report.scenario} {name} (ratio = value / p^(n*{s.d}))")
        for e in s.entries:
            lines.append(f"  n={e.n} q={e.q} value={e.value} ratio={e.ratio}")
    return "\n".join(lines)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = load_config(argv)
    except UsageError as e:
        print(build_parser().format_usage().rstrip(), file=sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        report = run(cfg)
    except BudgetExceeded as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    text = to_csv(report) if cfg.format == "csv" else to_json(report)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
        print(table(report))
    else:
        sys.stdout.write(text)
    for r in report.failures:
        print(f"FAIL {r.claim_id} n={r.n}: {r.relation} (value {r.value})", file=sys.stderr)
    for note in report.notes:
        print(f"partial: {note}", file=sys.stderr)
    if report.failures:
        return 1
    if report.partial:
        return 2
    return 0
