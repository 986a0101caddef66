"""Command-line front end.

Exit codes: 0 success, 1 generic failure, 2 bad modulus, 3 polynomial parse
error, 4 checkpoint mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .arith import is_prime
from .counting import (
    ARITHMETIC_FUNCTIONS,
    prime_primitive_root_count,
    restricted_average_order,
    simultaneous_spectrum,
    symmetry_statistic,
    value_set_count,
)
from .densities import ARTIN_CONSTANT, ak_series, artin_product, empirical_ak, fit_error_exponent
from .export import fraction_json, plot_data, spectrum_to_csv, spectrum_to_json
from .expsums import decomposition_check, max_t_scan, t_sum
from .poly import CoefficientOverflow, PolyParseError, parse_poly
from .roots import least_primitive_root
from .sweep import CheckpointMismatch, JsonlSink, default_workers, load_checkpoint, params_digest, run_sweep, truncate_jsonl
from .verify import verify_all

EXIT_FAILURE = 1
EXIT_BAD_MODULUS = 2
EXIT_PARSE = 3
EXIT_CHECKPOINT = 4

log = logging.getLogger("simroots")


class BadModulus(ValueError):
    pass


def _prime_context(p: int):
    if not is_prime(p):
        raise BadModulus(f"{p} is not prime")
    return least_primitive_root(p)


def _poly(text: str):
    try:
        return parse_poly(text)
    except PolyParseError as e:
        raise PolyParseError(f"cannot parse {text!r}: {e.message}", e.position) from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, out: str | None = None) -> None:
    _emit(json.dumps(obj, indent=2) + "\n", out)


def cmd_spectrum(args) -> int:
    ctx = _prime_context(args.prime)
    polys = [_poly(s) for s in args.poly]
    spec = simultaneous_spectrum(args.prime, polys, ctx)
    if args.format == "json":
        text = spectrum_to_json(spec) + "\n"
    else:
        text = spectrum_to_csv(spec, args.table_style)
    _emit(text, args.out)
    plot_path = args.plot_data or (str(Path(args.out).with_suffix(".dat")) if args.out else None)
    if plot_path:
        Path(plot_path).write_text(plot_data(spec))
    log.info("p=%d: %d primitive roots, %d tuples", spec.p, len(spec.rows), spec.tuple_count)
    return 0


def cmd_sweep(args) -> int:
    f = _poly(args.poly)
    workers = args.workers if args.workers is not None else default_workers()
    out = Path(args.out) if args.out else None
    ckpt = Path(args.checkpoint) if args.checkpoint else None
    if args.resume and ckpt is not None and ckpt.exists():
        data = load_checkpoint(ckpt, params_digest(args.z, f))
        if out is not None:
            truncate_jsonl(out, data["last_prime"])
        mode = "a"
    else:
        mode = "w"
    stream = out.open(mode) if out else sys.stdout
    try:
        sink = JsonlSink(stream)
        summary = run_sweep(
            args.z,
            f,
            args.x_max,
            workers=workers,
            sink=sink,
            checkpoint=ckpt,
            resume=args.resume,
            block_primes=args.checkpoint_every,
            max_blocks=args.max_blocks,
        )
        if args.max_blocks is None:
            sink.summary(summary)
    finally:
        if out:
            stream.close()
    return 0


def _series_points(x: int) -> list[int]:
    pts = []
    v = 10_000
    while v < x:
        pts.append(v)
        v *= 10
    return pts + [x]


def cmd_density(args) -> int:
    rep = empirical_ak(args.x, args.k)
    out = {
        "x": rep.x,
        "k": rep.k,
        "sum": float(rep.sum_exact),
        "li_x": rep.li_x,
        "pi_x": rep.pi_x,
        "ratio_li": rep.ratio_li,
        "ratio_pi": rep.ratio_pi,
    }
    if args.x >= 10_000:
        xs = _series_points(args.x)
        reports, diffs = ak_series(xs, args.k)
        out["series"] = {
            "x": xs,
            "ratio_li": [r.ratio_li for r in reports],
            "ratio_pi": [r.ratio_pi for r in reports],
            "successive_diff_li": diffs,
            "strictly_decreasing": all(b < a for a, b in zip(diffs, diffs[1:])),
        }
    if args.k == 1:
        value, tail = artin_product(args.artin_bound)
        out["artin_product"] = {
            "bound": args.artin_bound,
            "value": value,
            "tail_bound": tail,
            "reference": ARTIN_CONSTANT,
            "difference": value - ARTIN_CONSTANT,
        }
        if args.x >= 100_000:
            out["fitted_error_exponent_b"] = fit_error_exponent(_series_points(args.x))
    _emit_json(out)
    return 0


def cmd_verify_paper(args) -> int:
    results = verify_all()
    ok = all(r.passed for r in results)
    if args.json:
        _emit_json(
            [
                {
                    "p": r.p,
                    "poly": r.poly,
                    "elapsed": r.elapsed,
                    "checks": [
                        {"name": c.name, "passed": c.passed, "expected": repr(c.expected), "got": repr(c.got)}
                        for c in r.checks
                    ],
                    "notes": r.notes,
                }
                for r in results
            ]
        )
    else:
        for r in results:
            for c in r.checks:
                line = f"{'PASS' if c.passed else 'FAIL'}  p={r.p:<4} f={r.poly:<14} {c.name}"
                if not c.passed:
                    line += f"\n      expected: {c.expected!r}\n      got:      {c.got!r}"
                print(line)
            for n in r.notes:
                print(f"NOTE  p={r.p:<4} f={r.poly:<14} {n}")
        n = sum(len(r.checks) for r in results)
        print(f"{n} checks, {'all passed' if ok else 'FAILURES'}")
    return 0 if ok else EXIT_FAILURE


def cmd_stats(args) -> int:
    ctx = _prime_context(args.prime)
    pi_p = sum(1 for q in range(2, ctx.p) if is_prime(q))
    u = prime_primitive_root_count(ctx)
    out = {
        "p": ctx.p,
        "U": u,
        "pi": pi_p,
        "U_over_pi": u / pi_p if pi_p else None,
        "restricted_average_order": {k: restricted_average_order(ctx, k) for k in ARITHMETIC_FUNCTIONS},
        "value_set_count": {k: value_set_count(ctx, k) for k in ARITHMETIC_FUNCTIONS},
    }
    if args.limit is not None:
        out["incomplete_average_order"] = {
            "limit": args.limit,
            **{k: restricted_average_order(ctx, k, args.limit) for k in ARITHMETIC_FUNCTIONS},
        }
    if args.poly:
        spec = simultaneous_spectrum(ctx.p, [_poly(args.poly)], ctx)
        sym = symmetry_statistic(spec)
        out["symmetry"] = {**fraction_json(sym.value), "empty": sym.empty, "tuple_count": spec.tuple_count}
    _emit_json(out)
    return 0


def cmd_expsum(args) -> int:
    ctx = _prime_context(args.prime)
    out: dict = {"p": ctx.p, "tau": ctx.tau, "phi_p_minus_1": ctx.phi_p_minus_1}
    if args.u is not None:
        r = t_sum(args.u, ctx, literal=args.literal)
        out["t_sum"] = {
            "u": r.u,
            "exact": r.exact_value,
            "normalized_exponent": r.normalized_exponent,
        }
        if r.literal_value is not None:
            out["t_sum"]["literal"] = [r.literal_value.real, r.literal_value.imag]
    if args.scan:
        s = max_t_scan(ctx)
        out["scan"] = {"max_abs": s.max_abs, "argmax_u": s.argmax_u, "exponent": s.exponent}
    if args.decompose:
        if not args.poly:
            raise SystemExit("--decompose needs --poly")
        d = decomposition_check(ctx, _poly(args.poly), literal=args.literal)
        out["decomposition"] = {
            "M": float(d.M),
            "E0": float(d.E0),
            "E1": float(d.E1),
            "E2": float(d.E2),
            "total": float(d.total),
            "N": d.N,
            "reconstructs": d.reconstructs,
        }
    _emit_json(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="simroots", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="primitive roots z mod p with f(z) values and tuple flags")
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--poly", action="append", required=True, help="repeat for k-tuples")
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--table-style", choices=["plain", "paper"], default="plain")
    sp.add_argument("--out")
    sp.add_argument("--plot-data", help="two-column data file (default: OUT with .dat suffix)")
    sp.set_defaults(func=cmd_spectrum)

    sw = sub.add_parser("sweep", help="pi_f(x, z) over all primes up to --x-max, as JSONL")
    sw.add_argument("--z", type=int, required=True)
    sw.add_argument("--poly", required=True)
    sw.add_argument("--x-max", type=int, required=True)
    sw.add_argument("--workers", type=int, default=None, help="default: $SIMROOTS_WORKERS or 1")
    sw.add_argument("--checkpoint")
    sw.add_argument("--resume", action="store_true")
    sw.add_argument("--out")
    sw.add_argument("--checkpoint-every", type=int, default=100_000, help="primes per block")
    sw.add_argument("--max-blocks", type=int, default=None, help="stop after N blocks (resumable)")
    sw.set_defaults(func=cmd_sweep)

    de = sub.add_parser("density", help="empirical a_k, li/pi ratios, Artin product")
    de.add_argument("--x", type=int, required=True)
    de.add_argument("--k", type=int, required=True)
    de.add_argument("--artin-bound", type=int, default=10_000_000)
    de.set_defaults(func=cmd_density)

    vp = sub.add_parser("verify-paper", help="re-derive the four worked examples")
    vp.add_argument("--json", action="store_true")
    vp.set_defaults(func=cmd_verify_paper)

    st = sub.add_parser("stats", help="prime primitive roots, restricted sums, value sets")
    st.add_argument("--prime", type=int, required=True)
    st.add_argument("--poly")
    st.add_argument("--limit", type=int)
    st.set_defaults(func=cmd_stats)

    ex = sub.add_parser("expsum", help="T(u, p), max scan, four-term decomposition")
    ex.add_argument("--prime", type=int, required=True)
    ex.add_argument("--u", type=int)
    ex.add_argument("--scan", action="store_true")
    ex.add_argument("--decompose", action="store_true")
    ex.add_argument("--poly")
    ex.add_argument("--literal", action="store_true", help="use floating-point double sums")
    ex.set_defaults(func=cmd_expsum)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except BadModulus as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_MODULUS
    except (PolyParseError, CoefficientOverflow) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except CheckpointMismatch as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CHECKPOINT
    except Exception as e:  # noqa: BLE001
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
