"""Sign map of hempel_bound - landau_bound over a box of a0 values.

Writes the CSV grid and, with --plot, a PNG (needs matplotlib).
"""

import argparse

from omitroots import cli


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=201)
    ap.add_argument("--extent", type=float, default=3.0)
    ap.add_argument("--out", default="bound_winner.csv")
    ap.add_argument("--plot", default=None, help="optional PNG path")
    args = ap.parse_args()

    e = str(args.extent)
    code = cli.main([
        "--out", args.out, "grid", "bound_winner",
        "--x-range", f"-{e}", e, "--y-range", f"-{e}", e,
        "--nx", str(args.size), "--ny", str(args.size),
    ])
    if code or not args.plot:
        raise SystemExit(code)

    import matplotlib.pyplot as plt
    import numpy as np

    data = np.genfromtxt(args.out, delimiter=",", names=True)
    img = data["value"].reshape(args.size, args.size)
    plt.imshow(img, origin="lower", extent=[-args.extent, args.extent] * 2, cmap="coolwarm", vmin=-1, vmax=1)
    plt.title("+1: Landau sharper, -1: Hempel sharper")
    plt.savefig(args.plot, dpi=150)


if __name__ == "__main__":
    main()
