"""Deterministic machine-readable reports for verification checks.

A Report is the one output format every check produces: the check name,
the window, the e-mode, the exact number of quantifier instantiations,
and the (possibly empty) list of failures.  Failures are fully rendered
strings, so a serialized report is self-contained evidence and can be
used directly as a regression fixture.  JSON output is byte-identical
for identical inputs: key order is fixed and all numbers are exact
decimal strings, never floats.

evaluated_at substitutes a rational value for e in every rendered
residual of a symbolic report, which is how symbolic and numeric runs
are compared bit for bit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Failure:
    inputs: str
    equation_id: str
    residual: str

    def to_dict(self) -> dict:
        return {
            "inputs": self.inputs,
            "equation_id": self.equation_id,
            "residual": self.residual,
        }

    def sort_key(self) -> tuple:
        return (self.inputs, self.equation_id)


@dataclass
class Report:
    check: str
    window: int
    eps_mode: str
    total_cases: int
    failures: list = field(default_factory=list)
    extra: dict | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def sorted(self) -> "Report":
        return Report(self.check, self.window, self.eps_mode,
                      self.total_cases,
                      sorted(self.failures, key=Failure.sort_key),
                      self.extra)

    def to_dict(self) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "check": self.check,
            "window": self.window,
            "eps_mode": self.eps_mode,
            "total_cases": self.total_cases,
            "passed": self.passed,
            "failures": [f.to_dict() for f in
                         sorted(self.failures, key=Failure.sort_key)],
        }
        if self.extra is not None:
            out["extra"] = self.extra
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def evaluated_at(self, eps: Fraction) -> "Report":
        """The report a numeric run at e = eps should reproduce: residuals
        evaluated, e-mode relabeled.  Inputs and extra certificates carry
        no e by construction and are left untouched."""
        from .expressions import (ParseError, looks_like_element,
                                  parse_element, parse_scalar)
        from .scalars import sc

        evaluated = []
        for failure in self.failures:
            text = failure.residual
            try:
                if looks_like_element(text):
                    rendered = parse_element(text).eval_at(eps).render()
                else:
                    rendered = sc(parse_scalar(text).eval_at(eps)).render()
            except ParseError:
                # diagnostic free-text residuals pass through unchanged;
                # genuine pole errors in parsed values do propagate
                rendered = text
            evaluated.append(Failure(failure.inputs, failure.equation_id,
                                     rendered))
        return Report(self.check, self.window, f"eps={eps}",
                      self.total_cases, evaluated, self.extra)


def reports_to_json(reports: list, config: dict | None = None) -> str:
    doc = {"schema": SCHEMA_VERSION}
    if config:
        doc.update(config)
    doc["reports"] = [r.to_dict() for r in reports]
    return json.dumps(doc, indent=2)


def reports_to_text(reports: list, max_failures: int = 5) -> str:
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status}  {r.check}  (window={r.window}, "
                     f"{r.eps_mode}, cases={r.total_cases}, "
                     f"failures={len(r.failures)})")
        for failure in sorted(r.failures, key=Failure.sort_key)[:max_failures]:
            lines.append(f"      {failure.equation_id} at {failure.inputs}: "
                         f"{failure.residual}")
        if len(r.failures) > max_failures:
            lines.append(f"      ... {len(r.failures) - max_failures} more")
    return "\n".join(lines)
