from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class LawReport:
    """Outcome of one law-check run.

    ``counterexample`` is a JSON-ready dict ``{"law": name, "args": [...]}``
    that :func:`cprel.lawcheck.replay` can re-evaluate.
    """

    law_name: str
    instances_checked: int
    passed: bool
    counterexample: dict | None = None
    seed: int | None = None
    sampled: bool = False
    stats: dict = field(default_factory=dict, compare=False)
    parts: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.passed and self.counterexample is not None:
            raise ValueError("a passing report cannot carry a counterexample")
        if not self.passed and self.counterexample is None:
            raise ValueError("a failing report needs a counterexample")

    def lines(self, indent: str = "  ") -> list[str]:
        """This report's line followed by its parts, indented."""
        out = [self.line()]
        for part in self.parts:
            out += [indent + text for text in part.lines(indent)]
        return out

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        mode = f", sampled seed={self.seed}" if self.sampled else ""
        text = f"{verdict} {self.law_name} ({self.instances_checked} instances{mode})"
        if self.stats:
            text += " " + " ".join(f"{k}={v}" for k, v in self.stats.items())
        return text


def _cx_key(cx):
    return json.dumps(cx, sort_keys=True)


def merge_reports(name: str, reports) -> LawReport:
    """Combine reports; the result does not depend on their order."""
    reports = list(reports)
    failures = [r.counterexample for r in reports if not r.passed]
    seeds = {r.seed for r in reports if r.seed is not None}
    return LawReport(
        law_name=name,
        instances_checked=sum(r.instances_checked for r in reports),
        passed=not failures,
        counterexample=min(failures, key=_cx_key) if failures else None,
        seed=min(seeds) if seeds else None,
        sampled=any(r.sampled for r in reports),
        parts=tuple(reports),
    )
