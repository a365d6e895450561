"""Structured check reports shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field

MAX_WITNESSES = 25


@dataclass
class Check:
    id: str
    statement: str
    instances: int = 0
    failed: int = 0
    failures: list[dict] = field(default_factory=list)
    skipped: str | None = None

    def record(self, ok: bool, **witness) -> bool:
        self.instances += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_WITNESSES:
                self.failures.append(witness)
        return ok

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        out = {"id": self.id, "statement": self.statement, "instances": self.instances,
               "failed": self.failed, "failures": self.failures}
        if self.skipped:
            out["skipped"] = self.skipped
        return out


@dataclass
class Report:
    subject: str
    checks: list[Check] = field(default_factory=list)

    def check(self, id: str, statement: str) -> Check:
        c = Check(id, statement)
        self.checks.append(c)
        return c

    def skip(self, id: str, statement: str, reason: str) -> Check:
        c = Check(id, statement, skipped=reason)
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    def get(self, id: str) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed_checks(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def instances(self) -> int:
        return sum(c.instances for c in self.checks)

    def summary(self) -> str:
        bad = self.failed_checks
        if not bad:
            return f"{self.subject}: {len(self.checks)} checks, {self.instances} instances, all passed"
        names = ", ".join(c.id for c in bad)
        return f"{self.subject}: {len(bad)} of {len(self.checks)} checks failed ({names})"

    def to_dict(self) -> dict:
        return {"name": self.subject, "checks": [c.to_dict() for c in self.checks]}
