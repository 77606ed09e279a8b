"""Report rows and deterministic rendering to CSV, JSON, and text tables.

All numeric strings are produced through the ``decimal`` module from exact
rationals with explicit rounding directions (lower bounds toward -inf,
upper bounds toward +inf, single summary numbers half-even), so identical
invocations are byte-identical and no float ever enters a report.
"""

from __future__ import annotations

import csv
import decimal
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .numeric_engine import CertifiedReal

__all__ = [
    "CSV_HEADER",
    "ReportRow",
    "decimal_digits",
    "render_bound",
    "render_report",
    "render_signed",
]

CSV_HEADER = [
    "series_id",
    "p",
    "k",
    "N",
    "value_lo",
    "value_hi",
    "target",
    "residual",
    "exact_ok",
]

_ROUNDING = {
    "floor": decimal.ROUND_FLOOR,
    "ceiling": decimal.ROUND_CEILING,
    "half_even": decimal.ROUND_HALF_EVEN,
}


def decimal_digits(precision_bits: int) -> int:
    """Significant decimal digits needed to express a binary precision."""
    return int(math.ceil(precision_bits * math.log10(2))) + 2


def _to_decimal(value: Fraction, digits: int, mode: str) -> decimal.Decimal:
    ctx = decimal.Context(
        prec=max(digits, 1),
        rounding=_ROUNDING[mode],
        Emin=-999999999,
        Emax=999999999,
    )
    return ctx.divide(decimal.Decimal(value.numerator), decimal.Decimal(value.denominator))


def render_bound(value: Fraction, digits: int, mode: str) -> str:
    """Directed decimal rendering of an exact rational."""
    if value == 0:
        return "0"
    return str(_to_decimal(value, digits, mode))


def render_signed(value: Fraction, digits: int = 12) -> str:
    """Round-to-nearest rendering for summary quantities like residuals."""
    if value == 0:
        return "0"
    return str(_to_decimal(value, digits, "half_even"))


def render_interval(value: CertifiedReal, digits: int) -> tuple[str, str]:
    return (
        render_bound(value.lo, digits, "floor"),
        render_bound(value.hi, digits, "ceiling"),
    )


def distinguishing_digits(value: CertifiedReal, cap: int) -> int:
    """Enough significant digits to tell the bounds apart (for text tables)."""
    width = value.width
    if width == 0:
        return min(cap, 17)
    magnitude = value.mag
    if magnitude == 0:
        return 3
    mag_exp = _to_decimal(magnitude, 3, "half_even").adjusted()
    width_exp = _to_decimal(width, 3, "half_even").adjusted()
    return max(3, min(cap, mag_exp - width_exp + 2))


@dataclass(frozen=True)
class ReportRow:
    """One report line; N is 0 for exact identity checks, and exact_ok is
    present only on identity checks.  ``width`` is a presentation-only
    column for text tables and never enters CSV or JSON output."""

    series_id: str
    p: int
    k: int
    N: int
    value_lo: str
    value_hi: str
    target: str
    residual: str
    exact_ok: bool | None = None
    width: str | None = None

    def as_dict(self) -> dict:
        return {
            "series_id": self.series_id,
            "p": self.p,
            "k": self.k,
            "N": self.N,
            "value_lo": self.value_lo,
            "value_hi": self.value_hi,
            "target": self.target,
            "residual": self.residual,
            "exact_ok": self.exact_ok,
        }


def render_csv(rows: list[ReportRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        record = row.as_dict()
        record["exact_ok"] = (
            "" if row.exact_ok is None else ("true" if row.exact_ok else "false")
        )
        writer.writerow([record[name] for name in CSV_HEADER])
    return buffer.getvalue()


def render_json(rows: list[ReportRow]) -> str:
    return json.dumps([row.as_dict() for row in rows], indent=2) + "\n"


def render_pretty(rows: list[ReportRow]) -> str:
    with_width = any(row.width is not None for row in rows)
    header = list(CSV_HEADER)
    if with_width:
        header.insert(6, "+/-width")
    table = [header]
    for row in rows:
        record = row.as_dict()
        record["exact_ok"] = (
            "-" if row.exact_ok is None else ("ok" if row.exact_ok else "FAIL")
        )
        if with_width:
            record["+/-width"] = row.width if row.width is not None else "-"
        table.append([str(record[name]) for name in header])
    widths = [max(len(line[i]) for line in table) for i in range(len(header))]
    out = []
    for idx, line in enumerate(table):
        out.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(line)).rstrip())
        if idx == 0:
            out.append("  ".join("-" * widths[i] for i in range(len(header))).rstrip())
    return "\n".join(out) + "\n"


def render_report(rows: list[ReportRow], fmt: str) -> str:
    if fmt == "csv":
        return render_csv(rows)
    if fmt == "json":
        return render_json(rows)
    if fmt == "pretty":
        return render_pretty(rows)
    raise ValueError(f"unknown format {fmt!r}")
