"""pi_f(x, z) and the empirical density pi_f / pi at decades of x."""

import argparse

from simroots.densities import delta_series
from simroots.poly import parse_poly


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--z", type=int, default=2)
    ap.add_argument("--poly", default="t^2+1")
    ap.add_argument("--max-exp", type=int, default=6)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    xs = [10**e for e in range(3, args.max_exp + 1)]
    vals, diag = delta_series(xs, args.z, parse_poly(args.poly), args.workers)
    for x, v in zip(xs, vals):
        print(f"x={x:<9} pi_f/pi={v:.6f}")
    print(f"largest successive change {diag:.3e}")


if __name__ == "__main__":
    main()
