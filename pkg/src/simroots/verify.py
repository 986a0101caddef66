"""Re-derive the four worked examples and compare with the reference tables."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .counting import simultaneous_spectrum
from .densities import main_term_Mfp
from .export import spectrum_to_csv
from .poly import parse_poly
from .roots import enumerate_primitive_roots, least_primitive_root
from .tables import EXAMPLES, ReferenceExample

TIME_LIMIT = 1.0
TUPLES_97 = {(5, 26), (38, 87), (59, 87), (92, 26)}


@dataclass
class Check:
    name: str
    passed: bool
    expected: object = None
    got: object = None


@dataclass
class ExampleResult:
    p: int
    poly: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def verify_example(ex: ReferenceExample) -> ExampleResult:
    res = ExampleResult(ex.p, ex.poly)
    t0 = time.perf_counter()
    ctx = least_primitive_root(ex.p)
    f = parse_poly(ex.poly)
    spec = simultaneous_spectrum(ex.p, [f], ctx)

    def check(name, expected, got):
        res.checks.append(Check(name, expected == got, expected, got))

    check("phi(p-1)", ex.phi, ctx.phi_p_minus_1)
    check("tuple count", ex.tuple_count, spec.tuple_count)
    check("primitive roots", [z for z, _ in ex.table], enumerate_primitive_roots(ctx))
    got_table = [tuple(int(v) for v in line.split(",")) for line in spectrum_to_csv(spec, "paper").split()[1:]]
    check("table rows", [tuple(r) for r in ex.table], got_table)
    if ex.p == 97:
        got = {(r.z, r.values[0]) for r in spec.tuple_rows()}
        check("tuple set", sorted(TUPLES_97), sorted(got))
    main = main_term_Mfp(ctx, "asymptotic")
    if ex.main_term_discrepancy:
        res.notes.append(
            f"main term: stated {_fmt(ex.stated_main_term)} (~{float(ex.stated_main_term):.4f}) "
            f"vs recomputed {_fmt(main)} (~{float(main):.4f}); known discrepancy, not a failure"
        )
        res.checks.append(Check("main term recomputed", main == Fraction(97, 9), "97/9", _fmt(main)))
    else:
        check("main term", _fmt(ex.stated_main_term), _fmt(main))
    res.elapsed = time.perf_counter() - t0
    res.checks.append(Check(f"elapsed < {TIME_LIMIT:g}s", res.elapsed < TIME_LIMIT, TIME_LIMIT, round(res.elapsed, 4)))
    return res


def verify_all() -> list[ExampleResult]:
    return [verify_example(ex) for ex in EXAMPLES]
