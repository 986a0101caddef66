"""Empirical a_k at decades of x, both normalizations, plus the Cauchy-style
diagnostics used for a_2 and for M(x)/li(x)."""

import argparse

from simroots.densities import ARTIN_CONSTANT, ak_series, fit_error_exponent, log_integral, main_term_Mx


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--max-exp", type=int, default=7)
    args = ap.parse_args()
    xs = [10**e for e in range(3, args.max_exp + 1)]

    for k in args.k:
        reports, diffs = ak_series(xs, k)
        print(f"k={k}")
        for r, d in zip(reports, [None, *diffs]):
            dd = "" if d is None else f"  |step| {d:.3e}"
            print(f"  x={r.x:<10} S/li={r.ratio_li:.8f}  S/pi={r.ratio_pi:.8f}{dd}")
        ok = all(b < a for a, b in zip(diffs, diffs[1:]))
        print(f"  successive steps strictly decreasing: {ok}")
    print(f"a1 reference {ARTIN_CONSTANT}; fitted b for k=1: {fit_error_exponent(xs[1:]):.3f}")

    base = 10**5
    pts = [base, 2 * base, 4 * base, 8 * base]
    ratios = [main_term_Mx(x) / log_integral(x) for x in pts]
    steps = [abs(b - a) for a, b in zip(ratios, ratios[1:])]
    print("M(x)/li(x) at", pts)
    print("  ratios", " ".join(f"{r:.6f}" for r in ratios))
    ok = all(b < a for a, b in zip(steps, steps[1:]))
    print("  steps ", " ".join(f"{s:.2e}" for s in steps), "decreasing" if ok else "NOT decreasing")


if __name__ == "__main__":
    main()
