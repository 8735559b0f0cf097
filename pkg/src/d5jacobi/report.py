"""Verification reports and their lossless serialisation."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def decimal_string(value: Any, digits: int = 20) -> str:
    """Render an int, Fraction or mpf as a decimal string without binary-float detours."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    ctx = getattr(value, "context", None)
    if ctx is not None:
        if value == 0:
            return "0"
        return ctx.nstr(value, digits, min_fixed=-4, max_fixed=6)
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass
class VerificationReport:
    check: str
    passed: bool
    max_residual: str = "0"
    samples: int = 0
    seed: int | None = None
    threshold: str | None = None
    details: list[dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "check": self.check,
            "passed": self.passed,
            "max_residual": self.max_residual,
            "seed": self.seed,
            "samples": self.samples,
        }
        if self.threshold is not None:
            out["threshold"] = self.threshold
        out["details"] = self.details
        return out

    def __bool__(self) -> bool:
        return self.passed


class ResidualTracker:
    """Accumulates per-item residuals and builds a report.

    Exact checks feed residual 0 or 1 with ``threshold=0``; numeric checks
    feed mpf residuals against a relative threshold.
    """

    def __init__(self, check: str, threshold=0, seed=None, digits: int = 6):
        self.check = check
        self.threshold = threshold
        self.seed = seed
        self.digits = digits
        self.items: list[dict[str, Any]] = []
        self.worst = 0
        self.failed = False

    def add(self, item: str, residual, ok: bool | None = None, **extra) -> bool:
        if ok is None:
            ok = residual <= self.threshold
        if residual > self.worst:
            self.worst = residual
        self.failed |= not ok
        entry = {"item": item, "residual": decimal_string(residual, self.digits), "passed": bool(ok)}
        entry.update({k: (v if isinstance(v, (str, int, bool)) or v is None else decimal_string(v, self.digits))
                      for k, v in extra.items()})
        self.items.append(entry)
        return ok

    def report(self, samples: int | None = None) -> VerificationReport:
        return VerificationReport(
            check=self.check,
            passed=not self.failed and bool(self.items),
            max_residual=decimal_string(self.worst, self.digits),
            samples=len(self.items) if samples is None else samples,
            seed=self.seed,
            threshold=decimal_string(self.threshold, 6),
            details=self.items,
        )


def reports_to_json(reports: list[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


REPORT_COLUMNS = ["check", "passed", "max_residual", "threshold", "seed", "samples"]


def reports_to_csv(reports: list[VerificationReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS)
    for r in reports:
        d = r.to_dict()
        writer.writerow(["" if d.get(c) is None else str(d.get(c)).lower() if c == "passed" else d.get(c)
                         for c in REPORT_COLUMNS])
    return buf.getvalue()


def table_to_json(meta: dict[str, Any], columns: list[str], rows: list[dict[str, str]]) -> str:
    return json.dumps({**meta, "columns": columns, "rows": rows}, indent=2)


def table_to_csv(columns: list[str], rows: list[dict[str, str]]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: row.get(c, "") for c in columns})
    return buf.getvalue()
