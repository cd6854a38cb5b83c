"""Tiny pass/fail accounting shared by the verification routines.

A Report accumulates check outcomes and renders one summary line, which is
what the command line prints and the acceptance tests assert on.  Failure
details are capped so a systematically wrong sweep cannot flood output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, ClassVar

__all__ = ["Report"]


@dataclass
class Report:
    title: str
    checked: int = 0
    failures_seen: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    FAILURE_CAP: ClassVar[int] = 20

    def check(self, condition, detail: str | Callable[[], str]) -> bool:
        """Count one check; on failure, record the detail (lazily if callable)."""
        self.checked += 1
        if not condition:
            self.failures_seen += 1
            if len(self.failures) < self.FAILURE_CAP:
                self.failures.append(detail() if callable(detail) else str(detail))
        return bool(condition)

    def fail(self, detail: str | Callable[[], str]) -> None:
        self.check(False, detail)

    def note(self, text: str) -> None:
        self.notes.append(text)

    def absorb(self, other: "Report") -> None:
        """Fold another report's tallies in, labeling carried failures."""
        self.checked += other.checked
        self.failures_seen += other.failures_seen
        for detail in other.failures:
            if len(self.failures) < self.FAILURE_CAP:
                self.failures.append(f"{other.title}: {detail}")
        for text in other.notes:
            self.notes.append(f"{other.title}: {text}")

    @property
    def ok(self) -> bool:
        return self.failures_seen == 0

    def summary(self) -> str:
        status = "ok  " if self.ok else "FAIL"
        line = f"{status} {self.title}: {self.checked} checks"
        if self.failures_seen:
            line += f", {self.failures_seen} failures; first: {self.failures[0]}"
        if self.notes:
            line += f" ({'; '.join(self.notes)})"
        return line

    def as_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checked": self.checked,
            "failures_seen": self.failures_seen,
            "failures": list(self.failures),
            "notes": list(self.notes),
        }
