"""Command-line interface: constants, densities, bounds, figure grids, oracle suite."""

from __future__ import annotations

import argparse
import csv
import enum
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import bounds, constants, metrics, verify
from .errors import OmitRootsError

MAX_GRID_CELLS = 10**8
DEFAULT_VERIFY_NS = (2, 3, 5, 10)
CONSTANT_COLUMNS = ("n", "gamma_n", "r_n", "schwarz_factor", "covering_derivative", "lambda_at_zero")
# |a0^n - 1| below this counts as a0 in S_n for the landau warning
ROOT_WARN_TOL = 1e-12


class CLIError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # single machine-parseable line instead of usage + message
        sys.stderr.write(f"error: {message}\n")
        sys.exit(2)


class Quantity(enum.Enum):
    DENSITY = "density"
    LOWER_BOUND = "lower_bound"
    DENSITY_RATIO = "density_ratio"
    BOUND_WINNER = "bound_winner"


@dataclass(frozen=True)
class GridSpec:
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int
    ny: int
    quantity: Quantity

    def __post_init__(self):
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise CLIError("grid needs x_min < x_max and y_min < y_max")
        if self.nx < 1 or self.ny < 1:
            raise CLIError("grid sizes must be positive")
        if self.nx * self.ny > MAX_GRID_CELLS:
            raise CLIError(f"grid of {self.nx * self.ny} cells exceeds the limit of {MAX_GRID_CELLS}")

    def xs(self) -> list[float]:
        dx = (self.x_max - self.x_min) / self.nx
        return [self.x_min + (i + 0.5) * dx for i in range(self.nx)]

    def ys(self) -> list[float]:
        dy = (self.y_max - self.y_min) / self.ny
        return [self.y_min + (j + 0.5) * dy for j in range(self.ny)]


def _index(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}")
    if n < 2:
        raise argparse.ArgumentTypeError(f"n must be >= 2, got {n}")
    return n


def _index_list(text: str) -> list[int]:
    return [_index(t) for t in text.split(",") if t.strip()]


def sci(x: float) -> str:
    """17 significant digits, scientific notation."""
    return f"{x:.16e}"


class Formatter:
    def __init__(self, fmt: str, tol: float):
        self.fmt = fmt
        self.digits = max(1, min(17, math.ceil(-math.log10(tol)) + 1)) if tol > 0 else 17

    def num(self, x) -> str:
        if isinstance(x, bool):
            return str(x).lower()
        if isinstance(x, int):
            return str(x)
        if isinstance(x, complex):
            return f"{self.num(x.real)}{'+' if x.imag >= 0 else '-'}{self.num(abs(x.imag))}i"
        if self.fmt == "csv":
            return sci(x)
        return f"{x:.{self.digits}g}"

    def records(self, out, columns: Sequence[str], rows: list[dict]):
        if self.fmt == "json":
            payload = [{k: _jsonable(r[k]) for k in columns} for r in rows]
            out.write(json.dumps(payload if len(rows) != 1 else payload[0]) + "\n")
        elif self.fmt == "csv":
            w = csv.writer(out, lineterminator="\n")
            w.writerow(columns)
            for r in rows:
                w.writerow([self.num(r[k]) if not isinstance(r[k], str) else r[k] for k in columns])
        else:
            cells = [[self.num(r[k]) if not isinstance(r[k], str) else r[k] for k in columns] for r in rows]
            widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
            out.write("  ".join(c.rjust(wd) for c, wd in zip(columns, widths)).rstrip() + "\n")
            for row in cells:
                out.write("  ".join(v.rjust(wd) for v, wd in zip(row, widths)).rstrip() + "\n")


def _jsonable(v):
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    if isinstance(v, enum.Enum):
        return v.name
    return v


# -- commands ---------------------------------------------------------------


def cmd_constants(args, fmt: Formatter, out):
    ns = list(args.ns) or ([args.n] if args.n is not None else [])
    if fmt.fmt == "json":
        out.write(json.dumps([constants.root_constants(n).as_dict() for n in ns]) + "\n")
        return 0
    rows = []
    for n in ns:
        d = constants.root_constants(n).as_dict()
        rows.append({k: d[k] for k in CONSTANT_COLUMNS})
    fmt.records(out, CONSTANT_COLUMNS, rows)
    return 0


def cmd_density(args, fmt: Formatter, out):
    n = args.n or 2
    z = complex(args.re, args.im)
    d = metrics.lambda_punctured(n, z)
    row = {"n": n, "z": z, "density": d.value, "equality_locus": d.at_equality_locus}
    cols = ["n", "z", "density", "equality_locus"]
    if args.lower_bound:
        lb = metrics.lower_bound(n, z)
        row.update(lower_bound=lb, ratio=d.value / lb)
        cols += ["lower_bound", "ratio"]
    if d.near_puncture:
        _warn(f"z is within {metrics.NEAR_PUNCTURE} of a root of unity; density is large")
    fmt.records(out, cols, [row])
    return 0


def cmd_bound(args, fmt: Formatter, out):
    n = args.n or 2
    kind = args.kind
    if kind == "landau":
        a0 = complex(args.re, args.im)
        if abs(a0**n - 1.0) <= ROOT_WARN_TOL:
            _warn(f"a0 = {a0} is a root of unity of order {n}; no function omitting S_{n} attains it")
        row, cols = {"n": n, "a0": a0, "landau_bound": bounds.landau_bound(n, a0)}, ["n", "a0", "landau_bound"]
    elif kind == "schottky":
        row = {"n": n, "abs_f0": args.abs_f0, "abs_z": args.abs_z,
               "log_bound": bounds.schottky_bound(n, args.abs_f0, args.abs_z)}
        cols = ["n", "abs_f0", "abs_z", "log_bound"]
    elif kind == "schwarz":
        row = {"n": n, "abs_z": args.abs_z, "schwarz_bound": bounds.schwarz_bound(n, args.abs_z)}
        cols = ["n", "abs_z", "schwarz_bound"]
    else:
        a0 = complex(args.re, args.im)
        hb = bounds.hempel_landau_bound(a0)
        row = {"a0": a0, "hempel_bound": hb.value, "degenerate": hb.degenerate}
        cols = ["a0", "hempel_bound", "degenerate"]
    fmt.records(out, cols, [row])
    return 0


def cmd_compare(args, fmt: Formatter, out):
    c = bounds.compare_bounds(complex(args.re, args.im))
    row = {"a0": c.a0, "landau_bound": c.landau_bound, "hempel_bound": c.hempel_bound,
           "winner": c.winner.name, "hempel_degenerate": c.hempel_degenerate}
    fmt.records(out, list(row), [row])
    return 0


def grid_cell(quantity: Quantity, n: int) -> Callable[[complex], str]:
    def flagged(z: complex) -> bool:
        return abs(z - metrics._nearest_root(n, z)) < metrics.NEAR_PUNCTURE

    if quantity is Quantity.BOUND_WINNER:
        return lambda z: str(int(bounds.compare_bounds(z).winner))
    if quantity is Quantity.LOWER_BOUND:
        return lambda z: sci(metrics.lower_bound(n, z))
    if quantity is Quantity.DENSITY:
        return lambda z: "inf-flagged" if flagged(z) else sci(metrics.lambda_punctured(n, z).value)
    return lambda z: "inf-flagged" if flagged(z) else sci(
        metrics.lambda_punctured(n, z).value / metrics.lower_bound(n, z)
    )


def write_grid(spec: GridSpec, n: int, out) -> int:
    """CSV x,y,value over cell centres; y outer ascending, x inner ascending."""
    cell = grid_cell(spec.quantity, n)
    xs = spec.xs()
    out.write("x,y,value\n")
    count = 0
    for y in spec.ys():
        for x in xs:
            out.write(f"{sci(x)},{sci(y)},{cell(complex(x, y))}\n")
            count += 1
    return count


def cmd_grid(args, fmt: Formatter, out):
    spec = GridSpec(args.x_min, args.x_max, args.y_min, args.y_max, args.nx, args.ny, Quantity(args.quantity))
    write_grid(spec, args.n or 2, out)
    return 0


def cmd_verify(args, fmt: Formatter, out):
    reports = verify.run_oracle_suite(args.ns)
    if fmt.fmt == "json":
        out.write(verify.to_jsonl(reports))
    else:
        rows = [
            {"status": "PASS" if r.passed else "FAIL", "quantity": r.quantity, "main_value": r.main_value,
             "oracle_value": r.oracle_value, "relative_error": r.relative_error, "tolerance": r.tolerance}
            for r in reports
        ]
        fmt.records(out, ["status", "quantity", "main_value", "oracle_value", "relative_error", "tolerance"], rows)
    return 0 if all(r.passed for r in reports) else 1


def _warn(msg: str):
    sys.stderr.write(f"warning: {msg}\n")


def build_parser() -> argparse.ArgumentParser:
    def add_globals(parser, suppress: bool):
        default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        parser.add_argument("--n", type=_index, default=default(None),
                            help="number of punctures (default 2 where one n is needed)")
        parser.add_argument("--format", choices=("text", "csv", "json"), default=default("text"))
        parser.add_argument("--tol", type=float, default=default(1e-9),
                            help="display tolerance; sets printed digits in text output")
        parser.add_argument("--out", default=default(None), help="write output to FILE instead of stdout")

    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    add_globals(common, suppress=True)
    p = _Parser(prog="omitroots", description="Hyperbolic metric of the plane punctured at the n-th roots of unity.")
    add_globals(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser
    sub.add_parser = lambda name, **kw: _add(name, parents=[common], **kw)

    c = sub.add_parser("constants", help="table of gamma_n, R_n, Schwarz factor, |f_n'(0)|, lambda(0)")
    c.add_argument("ns", nargs="*", type=_index, metavar="N")
    c.set_defaults(func=cmd_constants)

    d = sub.add_parser("density", help="hyperbolic density of C minus S_n at a point")
    d.add_argument("re", type=float)
    d.add_argument("im", type=float, nargs="?", default=0.0)
    d.add_argument("--lower-bound", action="store_true", help="also print the sharp lower bound and the ratio")
    d.set_defaults(func=cmd_density)

    b = sub.add_parser("bound", help="Landau, Schottky, Schwarz or Hempel bound")
    bs = b.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    _badd = bs.add_parser
    bs.add_parser = lambda name, **kw: _badd(name, parents=[common], **kw)
    for name in ("landau", "hempel"):
        q = bs.add_parser(name)
        q.add_argument("re", type=float, help="Re a0")
        q.add_argument("im", type=float, nargs="?", default=0.0, help="Im a0")
    q = bs.add_parser("schottky")
    q.add_argument("abs_f0", type=float)
    q.add_argument("abs_z", type=float)
    q = bs.add_parser("schwarz")
    q.add_argument("abs_z", type=float)
    b.set_defaults(func=cmd_bound)

    m = sub.add_parser("compare", help="Landau bound vs Hempel bound at n = 2")
    m.add_argument("re", type=float)
    m.add_argument("im", type=float, nargs="?", default=0.0)
    m.set_defaults(func=cmd_compare)

    g = sub.add_parser("grid", help="CSV grid (x,y,value) over cell centres")
    g.add_argument("quantity", choices=[q.value for q in Quantity])
    g.add_argument("--x-range", nargs=2, type=float, default=(-2.0, 2.0), metavar=("MIN", "MAX"))
    g.add_argument("--y-range", nargs=2, type=float, default=(-2.0, 2.0), metavar=("MIN", "MAX"))
    g.add_argument("--nx", type=int, default=100)
    g.add_argument("--ny", type=int, default=100)
    g.set_defaults(func=cmd_grid)

    v = sub.add_parser("verify", help="run the oracle suite; exit 1 on any failure")
    v.add_argument("--ns", type=_index_list, default=list(DEFAULT_VERIFY_NS),
                   help="comma-separated n values (default 2,3,5,10; empty string for none)")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "grid":
        args.x_min, args.x_max = args.x_range
        args.y_min, args.y_max = args.y_range
    fmt = Formatter(args.format, args.tol)
    buf = io.StringIO()
    try:
        code = args.func(args, fmt, buf)
    except (OmitRootsError, CLIError, ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"error: {' '.join(str(exc).split())}\n")
        return 1
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(buf.getvalue())
        else:
            sys.stdout.write(buf.getvalue())
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    return code


if __name__ == "__main__":
    sys.exit(main())
