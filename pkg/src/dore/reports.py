"""Validation reports with deterministic, bit-stable rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class CheckEntry:
    """One failed check: which law, at which generator, with what residual."""

    check: str
    generator: str
    residual: str


@dataclass(frozen=True)
class ValidationReport:
    status: str  # "valid" | "invalid" | "malformed"
    failures: tuple[CheckEntry, ...] = ()
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "valid"


def report_from_failures(entries) -> ValidationReport:
    entries = tuple(entries)
    return ValidationReport("valid" if not entries else "invalid", entries)


def malformed_report(message: str) -> ValidationReport:
    return ValidationReport("malformed", (), message)


def emit_report(report: ValidationReport) -> str:
    """Render a report as JSON text; equal reports give identical bytes."""
    doc: dict = {"status": report.status}
    if report.status == "malformed":
        doc["message"] = report.message
    doc["failures"] = [
        {"check": e.check, "generator": e.generator, "residual": e.residual}
        for e in report.failures
    ]
    return json.dumps(doc, indent=2)
