"""Report-based check results.

Checks never abort on the first failure; they collect every violation so a
front end can print the whole list for hand-entered data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


@dataclass(frozen=True)
class Violation:
    rule: str
    witness: tuple  # basis indices or labels pinpointing the failure
    message: str


@dataclass(frozen=True)
class ValidationReport:
    passed: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @classmethod
    def from_violations(cls, violations: Iterable[Violation]) -> "ValidationReport":
        vs = tuple(violations)
        return cls(passed=not vs, violations=vs)

    def merged(self, other: "ValidationReport") -> "ValidationReport":
        return ValidationReport.from_violations(self.violations + other.violations)

    def __bool__(self) -> bool:
        return self.passed
