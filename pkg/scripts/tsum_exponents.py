"""max_u |T(u, p)| and its exponent log_p(max) over a range of primes."""

import argparse

from simroots.arith import primes_array
from simroots.expsums import max_t_scan
from simroots.roots import least_primitive_root


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=3)
    ap.add_argument("--hi", type=int, default=2000)
    ap.add_argument("--every", type=int, default=25, help="print every n-th prime")
    args = ap.parse_args()

    lo_exp = 1.0
    ps = primes_array(args.lo, args.hi).tolist()
    for i, p in enumerate(ps):
        s = max_t_scan(least_primitive_root(p))
        lo_exp = min(lo_exp, s.exponent)
        if i % args.every == 0 or p == ps[-1]:
            print(f"p={p:<6} max|T|={s.max_abs:<6} at u={s.argmax_u:<5} exponent={s.exponent:.4f}")
    print(f"{len(ps)} primes; smallest exponent {lo_exp:.4f}")


if __name__ == "__main__":
    main()
