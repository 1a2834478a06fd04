"""
Check results and suite reports shared by the spectral checks and the
verification suites. Text output is deterministic: checks appear in the
order they were run and carry no timings.
"""

from dataclasses import dataclass, field
from typing import List


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check."""
    name: str
    ok: bool
    detail: str = ""

    def to_text(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class SuiteReport:
    """Ordered list of checks plus free-form notes (e.g. sign conventions)."""

    suite: str
    checks: List[CheckResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(CheckResult(name, bool(ok), detail))
        return bool(ok)

    def note(self, text: str) -> None:
        self.notes.append(text)

    def extend(self, other: "SuiteReport") -> "SuiteReport":
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)
        return self

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.ok]

    def summary(self) -> str:
        passed = sum(1 for check in self.checks if check.ok)
        return f"{self.suite}: {passed}/{len(self.checks)} checks passed"

    def to_text(self) -> str:
        lines = [check.to_text() for check in self.checks]
        lines.extend(f"NOTE {text}" for text in self.notes)
        lines.append(self.summary())
        return "\n".join(lines) + "\n"
