"""Command-line front end: constants, moment scans, tail fits, mollified dumps.

Every table is written as CSV (header row) or JSON (``schema_version`` 1,
numbers as 17-significant-digit decimal strings). Exit status is 0 on
success, 2 on usage errors and 3 when a kernel cannot reach its accuracy.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .arithmetic import build_tables
from .errors import AccuracyError, DomainError, ResourceError, UsageError
from .euler import all_constants
from .kernel.dirichlet import approx_error
from .kernel.precision import PrecisionContext
from .mollifier import bchb_main_term, mollifier_coeffs
from .pairsum import VARIANTS, tail_fit
from .quadrature import QuadratureConfig, error_term_scan, hardy_littlewood_main, integrate_hl_baseline

COMMANDS = ("constants", "moment", "mollified", "tails", "approx", "report")
SCHEMA_VERSION = 1

COLUMNS = {
    "constants": ("a", "kind", "value", "prime_cutoff", "tail_bound"),
    "moment": ("T", "a", "lhs", "prediction", "rel_dev", "nodes", "err_est"),
    "tails": ("variant", "a", "X", "residual", "fitted_slope"),
    "approx": ("t", "a", "X", "E_a"),
    "mollified": ("T", "a", "X", "S1", "S2", "S3", "total", "gamma_used"),
    "baseline": ("T", "lhs", "prediction", "rel_dev", "nodes", "err_est"),
}


@dataclass
class RunConfig:
    command: str
    a: float = 2.0
    T: float = 1e4
    X: int = 1000
    prime_limit: int = 10**6
    digits: int = 30
    order: int = 16
    panel_c: float = 0.5
    rtol: float = 1e-6
    format: str = "csv"
    out: Optional[str] = None
    seed: int = 0
    kernel: str = "rs"
    tgrid: Optional[list] = None
    samples: int = 100
    extra: dict = field(default_factory=dict)

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if not self.a > 0:
            raise UsageError("--a: a must be positive")
        if self.command in ("moment", "mollified", "report", "approx") and self.T < 100:
            raise UsageError("--T: T must be >= 100")
        if self.tgrid is not None and self.command in ("moment", "report") and min(self.tgrid) < 100:
            raise UsageError("--tgrid: every T must be >= 100")
        if self.X < 1:
            raise UsageError("--X: X must be >= 1")
        if self.X > self.prime_limit:
            raise UsageError("--X: X must not exceed --prime-limit")
        if self.digits < 15:
            raise UsageError("--digits: digits must be >= 15")
        if self.samples < 1:
            raise UsageError("--samples: samples must be >= 1")
        if self.command == "tails" and self.X < 128:
            raise UsageError("--X: tails needs X >= 128 for a 4-point grid")
        return self


def fmt(x) -> str:
    """Decimal string: integers verbatim, reals at 17 significant digits."""
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    return f"{float(x):.16e}"


# ------------------------------------------------------------------ commands


def _constants_rows(cfg, table, ctx):
    return [
        {"a": cfg.a, "kind": v.kind, "value": v.value, "prime_cutoff": v.prime_cutoff, "tail_bound": v.tail_bound}
        for v in all_constants(cfg.a, cfg.prime_limit, table, ctx)
    ]


def _qcfg(cfg):
    return QuadratureConfig(panel_c=cfg.panel_c, order=cfg.order, rtol=cfg.rtol, kernel=cfg.kernel)


def _moment_rows(cfg, table, ctx):
    grid = cfg.tgrid or [cfg.T]
    return [vars(r) for r in error_term_scan(grid, cfg.a, _qcfg(cfg), cfg.prime_limit, table, ctx)]


def _mollified_rows(cfg, table, ctx):
    m = bchb_main_term(cfg.T, mollifier_coeffs(cfg.a, cfg.X, table), ctx)
    return [{"T": m.T, "a": m.a, "X": m.X, "S1": m.S1, "S2": m.S2, "S3": m.S3, "total": m.total, "gamma_used": m.gamma_used}]


def _tail_grid(X):
    grid = []
    x = 16
    while x <= X:
        grid.append(x)
        x *= 2
    return grid


def _tails_rows(cfg, table, ctx):
    grid = _tail_grid(cfg.X)
    rows = []
    for variant in VARIANTS:
        fit = tail_fit(cfg.a, variant, grid, None, table, ctx)
        for X, r in zip(fit.X_grid, fit.residuals):
            rows.append({"variant": variant, "a": cfg.a, "X": X, "residual": r, "fitted_slope": fit.slope})
    return rows


def _approx_rows(cfg, table, ctx):
    if cfg.tgrid:
        ts = [float(t) for t in cfg.tgrid]
    else:
        rng = np.random.default_rng(cfg.seed)
        ts = sorted(rng.uniform(cfg.T, 2 * cfg.T, cfg.samples).tolist())
    return [{"t": t, "a": cfg.a, "X": cfg.X, "E_a": float(approx_error(t, cfg.a, cfg.X, table, ctx))} for t in ts]


def _baseline_rows(cfg, ctx):
    est = integrate_hl_baseline(cfg.T, _qcfg(cfg), ctx)
    pred = hardy_littlewood_main(2 * cfg.T, ctx) - hardy_littlewood_main(cfg.T, ctx)
    return [{"T": cfg.T, "lhs": est.value, "prediction": pred, "rel_dev": (est.value - pred) / pred,
             "nodes": est.nodes_used, "err_est": est.err_est}]


def _table_limit(cfg):
    limit = max(cfg.prime_limit, cfg.X)
    if cfg.command == "tails":
        limit = max(limit, 16 * _tail_grid(cfg.X)[-1])
    return limit


# ------------------------------------------------------------------ output


def _csv(rows, columns) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([fmt(r[c]) for c in columns])
    return buf.getvalue()


def _json_rows(rows, columns):
    return [{c: fmt(r[c]) for c in columns} for r in rows]


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def render(cfg: RunConfig) -> str:
    """Compute the artifact for ``cfg`` and return it as text."""
    cfg.validate()
    ctx = PrecisionContext(cfg.digits)
    table = build_tables(_table_limit(cfg))
    if cfg.command == "report":
        sections = {
            "constants": _constants_rows(cfg, table, ctx),
            "mollified": _mollified_rows(cfg, table, ctx),
            "baseline": _baseline_rows(cfg, ctx),
            "moment": _moment_rows(cfg, table, ctx),
        }
        doc = {"schema_version": SCHEMA_VERSION, "command": "report"}
        for name, rows in sections.items():
            doc[name] = _json_rows(rows, COLUMNS[name])
        return _json(doc)
    producer = {
        "constants": _constants_rows,
        "moment": _moment_rows,
        "mollified": _mollified_rows,
        "tails": _tails_rows,
        "approx": _approx_rows,
    }[cfg.command]
    rows = producer(cfg, table, ctx)
    columns = COLUMNS[cfg.command]
    if cfg.format == "json":
        return _json({"schema_version": SCHEMA_VERSION, "command": cfg.command, "rows": _json_rows(rows, columns)})
    return _csv(rows, columns)


def run(cfg: RunConfig) -> int:
    """Render ``cfg`` to ``cfg.out`` (or stdout); return the exit status."""
    try:
        text = render(cfg)
    except (UsageError, DomainError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AccuracyError as exc:
        print(f"accuracy error: {exc}", file=sys.stderr)
        return 3
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _tgrid(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse grid {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zetaratio",
        description="Second moments of zeta(1/2+it)/zeta(1+iat): constants, quadrature and diagnostics.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--a", type=float, default=2.0, help="frequency multiplier a > 0 (default 2)")
    p.add_argument("--T", type=float, default=1e4, help="lower end of [T, 2T] (default 1e4)")
    p.add_argument("--X", type=int, default=1000, help="Dirichlet-polynomial / pair-sum cutoff (default 1000)")
    p.add_argument("--prime-limit", type=int, default=10**6, help="prime cutoff P of the Euler products")
    p.add_argument("--digits", type=int, default=30, help="working significant digits (>= 15)")
    p.add_argument("--order", type=int, default=16, help="Gauss-Legendre order per panel")
    p.add_argument("--panel-c", type=float, default=0.5, help="panel width in units of the mean zero gap")
    p.add_argument("--rtol", type=float, default=1e-6, help="per-panel relative tolerance")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled-t studies")
    p.add_argument("--kernel", choices=("em", "rs"), default="rs", help="zeta(1/2+it) kernel")
    p.add_argument("--tgrid", type=_tgrid, default=None, help='comma list "t1,t2,..."')
    p.add_argument("--samples", type=int, default=100, help="number of sampled t for approx")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        a=args.a,
        T=args.T,
        X=args.X,
        prime_limit=args.prime_limit,
        digits=args.digits,
        order=args.order,
        panel_c=args.panel_c,
        rtol=args.rtol,
        format=args.format,
        out=args.out,
        seed=args.seed,
        kernel=args.kernel,
        tgrid=args.tgrid,
        samples=args.samples,
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
