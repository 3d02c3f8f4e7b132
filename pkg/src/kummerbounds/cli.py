"""Command-line tables for the Kummer and incomplete Gamma enclosures.

Subcommands::

    kummerbounds enclose     --alpha A --delta D --n N --m M --grid a:b:c
    kummerbounds gamma       --nu V --m M --q Q --grid a:b:c
    kummerbounds error-ratio --alpha A --delta D --x X [--x X ...] --n-max K
    kummerbounds examples    {i,ii,iii,gamma-half,footnote}
    kummerbounds norm        --alpha A --delta D --sigma S --n N --grid a:b:c

Every subcommand accepts ``--format csv|json`` and ``--output PATH``.
Exit status is 0 on success, 2 for usage or domain errors and 3 when an
enclosure collapses or the reference quadrature misses its tolerance.
Nothing is written unless the whole table was computed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .errors import DomainError, NumericalFailure
from .incgamma import matched_enclosure_gamma, pade_enclosure_gamma, taylor_enclosure_gamma
from .kummer import (
    KummerParams,
    error_bounds,
    expansion_enclosure,
    gamma_partial_sum,
    sup_norm_error_bound,
    taylor_enclosure_N,
)
from .oracle import DEFAULT_TOL, gamma_reference, n_reference
from .studies import run_example

__all__ = ["main", "build_parser", "EvalGrid", "TABLE_SCHEMA", "COLUMNS"]

MAX_POINTS = 10 ** 7
MAX_N = 200
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
# relative slack used by --verify, well above the reference tolerance
VERIFY_SLACK = 1e-9

COLUMNS = {
    "enclose": ["x", "g", "G", "t", "T", "j", "J", "N_oracle", "xi", "eta"],
    "gamma": ["x", "taylor_lo", "taylor_hi", "pade_lo", "pade_hi",
              "matched_lo", "matched_hi", "gamma_oracle", "rel_uncertainty"],
    "error-ratio": ["n", "x", "abs_eps", "calE", "ratio"],
    "examples": ["item", "published", "recomputed", "status"],
    "norm": ["n", "sigma", "bound", "empirical_sup", "argmax_x"],
}

# JSON output layout; infinities and missing values are written as null
TABLE_SCHEMA: Dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "version", "parameters", "columns", "rows"],
    "additionalProperties": False,
    "properties": {
        "command": {"enum": sorted(COLUMNS)},
        "version": {"type": "string"},
        "parameters": {"type": "object"},
        "columns": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "rows": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": ["number", "string", "null"]},
            },
        },
    },
}


@dataclass(frozen=True)
class EvalGrid:
    """``start:stop:step``, endpoints included up to half a step."""

    start: Decimal
    stop: Decimal
    step: Decimal

    @classmethod
    def parse(cls, text: str) -> "EvalGrid":
        parts = text.split(":")
        if len(parts) != 3:
            raise DomainError(f"grid must look like start:stop:step, got {text!r}")
        try:
            start, stop, step = (Decimal(p.strip()) for p in parts)
        except InvalidOperation:
            raise DomainError(f"grid entries must be numbers, got {text!r}") from None
        if not all(v.is_finite() for v in (start, stop, step)):
            raise DomainError("grid entries must be finite")
        if step <= 0:
            raise DomainError(f"grid step must be positive, got {step}")
        if start > stop:
            raise DomainError(f"grid start {start} exceeds stop {stop}")
        if (stop - start) / step > MAX_POINTS:
            raise DomainError(f"grid has more than {MAX_POINTS} points")
        return cls(start, stop, step)

    def points(self) -> List[float]:
        count = int((self.stop - self.start) / self.step + Decimal("0.5"))
        return [float(self.start + i * self.step) for i in range(count + 1)]


def _number(v: Optional[float]) -> Optional[float]:
    if v is None or not math.isfinite(v):
        return None
    return float(v)


def _csv_cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v)
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        # repr is the shortest string that round-trips, never above 17 digits
        return repr(v) if math.isfinite(v) else ("inf" if v > 0 else "-inf" if v < 0 else "nan")
    return str(v)


def render(command: str, parameters: Dict[str, Any], rows: List[list], fmt: str) -> str:
    columns = COLUMNS[command]
    if fmt == "json":
        doc = {
            "command": command,
            "version": __version__,
            "parameters": parameters,
            "columns": columns,
            "rows": [[_number(v) if isinstance(v, float) else v for v in row] for row in rows],
        }
        return json.dumps(doc, indent=1, allow_nan=False) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(v) for v in row])
    return buf.getvalue()


def _oracle_n(p: KummerParams, x: float) -> float:
    return n_reference(p.alpha, p.delta, x, DEFAULT_TOL).value


def _verify(rows: List[list], pairs: Sequence[tuple], ref_col: int, label: str):
    """Spot-check every hundredth row: each ``(lo, hi)`` column pair must contain the reference."""
    for row in rows[::100]:
        ref = row[ref_col]
        slack = VERIFY_SLACK * max(1.0, abs(ref))
        for lo_col, hi_col in pairs:
            lo, hi = row[lo_col], row[hi_col]
            if lo is None or hi is None:
                continue
            if not lo - slack <= ref <= hi + slack:
                raise NumericalFailure(
                    f"{label}: reference {ref!r} outside [{lo!r}, {hi!r}] at x={row[0]!r}")


def cmd_enclose(args) -> tuple[Dict[str, Any], List[list]]:
    p = KummerParams(args.alpha, args.delta)
    _positive("n", args.n)
    _positive("m", args.m)
    grid = EvalGrid.parse(args.grid)
    rows = []
    for x in grid.points():
        _nonnegative(x)
        gam = expansion_enclosure(p, args.n, x)
        tay = taylor_enclosure_N(p, args.m, x)
        both = tay.intersect(gam)
        rows.append([x, gam.lo, gam.hi, tay.lo, tay.hi, both.lo, both.hi,
                     _oracle_n(p, x), gam.relative_uncertainty(), both.relative_uncertainty()])
    if args.verify:
        _verify(rows, [(1, 2), (3, 4), (5, 6)], 7, "enclose")
    params = {"alpha": args.alpha, "delta": args.delta, "n": args.n, "m": args.m,
              "grid": args.grid}
    return params, rows


def cmd_gamma(args) -> tuple[Dict[str, Any], List[list]]:
    nu = args.nu
    if not nu > 0:
        raise DomainError(f"nu must be positive, got {nu!r}")
    _positive("m", args.m)
    if not 0 <= args.q <= 2:
        raise DomainError(f"q must lie in 0..2, got {args.q}")
    grid = EvalGrid.parse(args.grid)
    rows = []
    for x in grid.points():
        _nonnegative(x)
        tay = taylor_enclosure_gamma(nu, x, args.m)
        pade_lo = pade_hi = None
        if 0 < nu < 1 and x > 0:
            pade = pade_enclosure_gamma(nu, x, args.q)
            pade_lo, pade_hi = pade.lo, pade.hi
        best = matched_enclosure_gamma(nu, x, args.m, args.q, args.tail)
        ref = gamma_reference(nu, x, DEFAULT_TOL).value
        rows.append([x, tay.lo, tay.hi, pade_lo, pade_hi, best.lo, best.hi, ref,
                     best.relative_uncertainty()])
    if args.verify:
        _verify(rows, [(1, 2), (3, 4), (5, 6)], 7, "gamma")
    params = {"nu": nu, "m": args.m, "q": args.q, "tail": args.tail, "grid": args.grid}
    return params, rows


def cmd_error_ratio(args) -> tuple[Dict[str, Any], List[list]]:
    p = KummerParams(args.alpha, args.delta)
    if not 1 <= args.n_max <= MAX_N:
        raise DomainError(f"n-max must lie in 1..{MAX_N}, got {args.n_max}")
    xs = args.x if args.x else [1.0, 6.0]
    for x in xs:
        _nonnegative(x)
    rows = []
    for x in xs:
        ref = _oracle_n(p, x)
        for n in range(1, args.n_max + 1):
            eps = abs(ref - gamma_partial_sum(p, n, x))
            cal = error_bounds(p, n, x).calE
            ratio = eps / cal if cal > 0 else None
            rows.append([n, x, eps, cal, ratio])
    params = {"alpha": args.alpha, "delta": args.delta, "x": xs, "n_max": args.n_max}
    return params, rows


def cmd_examples(args) -> tuple[Dict[str, Any], List[list]]:
    rows = [[c.item, c.published, c.recomputed, "PASS" if c.passed else "FAIL"]
            for c in run_example(args.which)]
    return {"which": args.which}, rows


def cmd_norm(args) -> tuple[Dict[str, Any], List[list]]:
    p = KummerParams(args.alpha, args.delta)
    _positive("n", args.n)
    bound = sup_norm_error_bound(p, args.sigma, args.n)
    grid = EvalGrid.parse(args.grid)
    best, where = 0.0, 0.0
    for x in grid.points():
        _nonnegative(x)
        eps = abs(_oracle_n(p, x) - gamma_partial_sum(p, args.n, x))
        weight = 1.0 if args.sigma == 0 else x ** args.sigma
        val = weight * eps
        if val > best:
            best, where = val, x
    params = {"alpha": args.alpha, "delta": args.delta, "sigma": args.sigma, "n": args.n,
              "grid": args.grid}
    return params, [[args.n, args.sigma, bound, best, where]]


def _positive(name: str, value: int):
    if value < 1:
        raise DomainError(f"{name} must be >= 1, got {value}")


def _nonnegative(x: float):
    if not x >= 0:
        raise DomainError(f"x must be nonnegative, got {x!r}")


def _common(sub: argparse.ArgumentParser):
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--output", metavar="PATH", help="write here instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kummerbounds",
        description="Two-sided bounds for the Kummer function and incomplete Gamma functions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    enc = subs.add_parser("enclose", help="Gamma-expansion, Taylor and matched bounds on a grid")
    enc.add_argument("--alpha", type=float, required=True)
    enc.add_argument("--delta", type=float, required=True)
    enc.add_argument("--n", type=int, default=2, help="terms of the Gamma expansion")
    enc.add_argument("--m", type=int, default=4, help="Taylor order")
    enc.add_argument("--grid", default="0:7:0.01", help="start:stop:step, endpoints included")
    enc.add_argument("--verify", action="store_true",
                     help="check every hundredth row against the reference value")
    _common(enc)
    enc.set_defaults(func=cmd_enclose)

    gam = subs.add_parser("gamma", help="bounds for the lower incomplete Gamma function")
    gam.add_argument("--nu", type=float, required=True)
    gam.add_argument("--m", type=int, default=4)
    gam.add_argument("--q", type=int, default=1)
    gam.add_argument("--tail", choices=("pade", "laurent"), default="pade",
                     help="large-x family used in the matched bounds")
    gam.add_argument("--grid", default="0:5:0.01")
    gam.add_argument("--verify", action="store_true")
    _common(gam)
    gam.set_defaults(func=cmd_gamma)

    err = subs.add_parser("error-ratio", help="actual error over its analytic bound, n = 1..n-max")
    err.add_argument("--alpha", type=float, required=True)
    err.add_argument("--delta", type=float, required=True)
    err.add_argument("--x", type=float, action="append", help="repeatable; default 1 and 6")
    err.add_argument("--n-max", type=int, default=13)
    _common(err)
    err.set_defaults(func=cmd_error_ratio)

    ex = subs.add_parser("examples", help="recompute the published worked examples")
    ex.add_argument("which", choices=("i", "ii", "iii", "gamma-half", "footnote"))
    _common(ex)
    ex.set_defaults(func=cmd_examples)

    norm = subs.add_parser("norm", help="weighted sup-norm error bound against a grid estimate")
    norm.add_argument("--alpha", type=float, required=True)
    norm.add_argument("--delta", type=float, required=True)
    norm.add_argument("--sigma", type=float, default=0.0)
    norm.add_argument("--n", type=int, default=1)
    norm.add_argument("--grid", default="0:100:0.5")
    _common(norm)
    norm.set_defaults(func=cmd_norm)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        params, rows = args.func(args)
        text = render(args.command, params, rows, args.format)
    except DomainError as exc:
        print(f"kummerbounds: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalFailure as exc:
        print(f"kummerbounds: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0
