"""Result records shared by the analysis, realization and embedding audits."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    """Outcome of one executable check.

    ``tag`` names the structural statement being exercised; ``witness`` holds a
    counterexample (or the positive certificate, for constructive checks).
    """

    name: str
    tag: str
    passed: bool
    detail: str = ""
    witness: object = None
    count: int = 0

    def __bool__(self):
        return self.passed

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{self.name} [{self.tag}]: {status}{extra}"


@dataclass
class CheckLog:
    results: list = field(default_factory=list)

    def add(self, result: CheckResult) -> CheckResult:
        self.results.append(result)
        return result

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def lines(self) -> list:
        return [r.line() for r in self.results]
