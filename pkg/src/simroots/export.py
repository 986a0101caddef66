"""CSV / JSON / plot-data writers and readers for spectra."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Sequence

from .counting import SpectrumRow, TupleSpectrum
from .poly import IntPolynomial, parse_poly


def _value_headers(k: int, sentinel_style: bool) -> list[str]:
    if sentinel_style:
        return ["f(z)"] if k == 1 else [f"f{i}(z)" for i in range(1, k + 1)]
    return [f"f{i}" for i in range(1, k + 1)]


def spectrum_to_csv(spec: TupleSpectrum, table_style: str = "plain") -> str:
    """Plain: ``z,f1,...,is_tuple``. ``table_style="paper"``: ``z,f(z)`` with 0 on non-tuple rows."""
    sentinel_style = table_style == "paper"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    k = len(spec.polys)
    if sentinel_style:
        w.writerow(["z", *_value_headers(k, True)])
        for r in spec.rows:
            w.writerow([r.z, *(r.values if r.is_tuple else (0,) * k)])
    else:
        w.writerow(["z", *_value_headers(k, False), "is_tuple"])
        for r in spec.rows:
            w.writerow([r.z, *r.values, "true" if r.is_tuple else "false"])
    return buf.getvalue()


def spectrum_from_csv(text: str, p: int, polys: Sequence[IntPolynomial]) -> TupleSpectrum:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    k = len(polys)
    if header != ["z", *_value_headers(k, False), "is_tuple"]:
        raise ValueError(f"unexpected spectrum header {header!r}")
    rows = []
    for rec in reader:
        flag = rec[-1]
        if flag not in ("true", "false"):
            raise ValueError(f"bad is_tuple value {flag!r}")
        rows.append(SpectrumRow(int(rec[0]), tuple(int(v) for v in rec[1:-1]), flag == "true"))
    return TupleSpectrum(p, tuple(polys), tuple(rows))


def spectrum_to_dict(spec: TupleSpectrum) -> dict:
    return {
        "p": spec.p,
        "polys": [str(f) for f in spec.polys],
        "tuple_count": spec.tuple_count,
        "rows": [{"z": r.z, "values": list(r.values), "is_tuple": r.is_tuple} for r in spec.rows],
    }


def spectrum_to_json(spec: TupleSpectrum) -> str:
    return json.dumps(spectrum_to_dict(spec), indent=2)


def spectrum_from_json(text: str) -> TupleSpectrum:
    d = json.loads(text)
    rows = tuple(SpectrumRow(r["z"], tuple(r["values"]), r["is_tuple"]) for r in d["rows"])
    return TupleSpectrum(d["p"], tuple(parse_poly(s) for s in d["polys"]), rows)


def plot_data(spec: TupleSpectrum) -> str:
    """Whitespace-separated ``z value...`` lines, 0 for non-tuple rows."""
    k = len(spec.polys)
    lines = ["# z " + " ".join(_value_headers(k, True))]
    for r in spec.rows:
        vals = r.values if r.is_tuple else (0,) * k
        lines.append(" ".join(str(v) for v in (r.z, *vals)))
    return "\n".join(lines) + "\n"


def fraction_json(q: Fraction) -> dict:
    return {"exact": f"{q.numerator}/{q.denominator}", "value": float(q)}
