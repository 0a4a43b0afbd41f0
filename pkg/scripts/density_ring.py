"""Density of the punctured plane for large n on and around the unit circle.

Prints the density on the circle |z| = radius, where it oscillates n times per
turn, and writes an optional CSV grid of the density.
"""

import argparse
import cmath
import math

from omitroots import cli, gamma_n, lambda_punctured


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=70)
    ap.add_argument("--radius", type=float, default=1.02)
    ap.add_argument("--samples", type=int, default=1400)
    ap.add_argument("--grid", default=None, help="write a 200x200 CSV grid here")
    args = ap.parse_args()

    vals = [lambda_punctured(args.n, cmath.rect(args.radius, 2 * math.pi * k / args.samples)).value
            for k in range(args.samples)]
    maxima = sum(vals[k - 1] < vals[k] > vals[(k + 1) % len(vals)] for k in range(len(vals)))
    print(f"n = {args.n}, |z| = {args.radius}")
    print(f"density range {min(vals):.6g} .. {max(vals):.6g}, local maxima {maxima}")
    print(f"1/gamma_n = {1 / gamma_n(args.n):.6g}")
    if args.grid:
        raise SystemExit(cli.main([
            "--n", str(args.n), "--out", args.grid, "grid", "density",
            "--x-range", "-1.5", "1.5", "--y-range", "-1.5", "1.5", "--nx", "200", "--ny", "200",
        ]))


if __name__ == "__main__":
    main()
