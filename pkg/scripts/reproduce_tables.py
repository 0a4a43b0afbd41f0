"""Print gamma_n, R_n and the Schwarz factor next to the published six-digit values."""

import argparse

from omitroots import gamma_n, r_n, schwarz_factor
from omitroots.verify import GAMMA_TABLE, R_TABLE, SCHWARZ_TABLE


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rtol", type=float, default=5e-6)
    args = ap.parse_args()

    print(f"{'n':>5} {'gamma_n':>14} {'r_n':>14} {'schwarz':>14}  ok")
    bad = 0
    for n in sorted(GAMMA_TABLE):
        row = (gamma_n(n), r_n(n), schwarz_factor(n))
        ref = (GAMMA_TABLE[n], R_TABLE[n], SCHWARZ_TABLE[n])
        ok = all(abs(v / r - 1) <= args.rtol for v, r in zip(row, ref))
        bad += not ok
        print(f"{n:>5} {row[0]:14.8g} {row[1]:14.8g} {row[2]:14.8g}  {'yes' if ok else 'NO'}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
