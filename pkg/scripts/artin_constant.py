"""Partial Euler products for the Artin constant at growing bounds."""

import argparse
import time

from simroots.densities import ARTIN_CONSTANT, artin_product


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-exp", type=int, default=7, help="largest bound is 10**max_exp")
    args = ap.parse_args()

    print(f"{'bound':>10} {'product':>22} {'minus a1':>11} {'tail bound':>11} {'secs':>6}")
    for e in range(2, args.max_exp + 1):
        t0 = time.perf_counter()
        value, tail = artin_product(10**e)
        dt = time.perf_counter() - t0
        print(f"{10**e:>10} {value:>22.18f} {value - ARTIN_CONSTANT:>11.3e} {tail:>11.3e} {dt:>6.2f}")


if __name__ == "__main__":
    main()
