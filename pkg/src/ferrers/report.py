from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field


@dataclass
class VerifyReport:
    """Outcome of one verification sweep.

    ``failures`` holds ``{"input", "expected", "actual"}`` dicts; an empty
    list means the sweep passed.
    """

    subject: str
    cases_run: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    unit: str = "cases"

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, input, expected, actual) -> None:
        self.failures.append({"input": input, "expected": expected, "actual": actual})

    def summary(self) -> str:
        return f"{self.subject}: {self.cases_run} {self.unit}, {len(self.failures)} failures"

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "subject": self.subject,
            "cases_run": self.cases_run,
            "failures": self.failures,
        }
        if timing:
            out["elapsed"] = self.elapsed
        return out

    @contextmanager
    def timed(self):
        t0 = time.perf_counter()
        try:
            yield self
        finally:
            self.elapsed += time.perf_counter() - t0
