"""Verification reports shared by every exhaustive checker."""

from __future__ import annotations

from dataclasses import dataclass, field


class GuardExceeded(ValueError):
    """Requested sweep is larger than the exhaustive-enumeration guard allows."""


def guard(value: int, limit: int, what: str = "max_degree") -> None:
    if value > limit:
        raise GuardExceeded(f"{what}={value} exceeds the guard {limit}")
    if value < 0:
        raise ValueError(f"{what} must be non-negative")


@dataclass(frozen=True)
class Failure:
    identity: str
    witness: tuple[str, ...]
    lhs: str
    rhs: str

    def to_dict(self) -> dict:
        return {"identity": self.identity, "witness": list(self.witness),
                "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class Report:
    suite: str
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, identity: str, witness, lhs, rhs, limit: int = 50) -> None:
        """Log a failed identity; only the first ``limit`` witnesses are kept."""
        if len(self.failures) < limit:
            self.failures.append(Failure(identity, tuple(str(w) for w in witness), str(lhs), str(rhs)))
        else:
            self._dropped = getattr(self, "_dropped", 0) + 1

    def check(self, identity: str, witness, lhs, rhs) -> bool:
        self.checked += 1
        if lhs != rhs:
            self.record(identity, witness, lhs, rhs)
            return False
        return True

    def extend(self, other: "Report") -> "Report":
        self.checked += other.checked
        self.failures.extend(other.failures)
        return self

    def to_dict(self) -> dict:
        return {"suite": self.suite, "checked": self.checked,
                "failures": [f.to_dict() for f in self.failures]}

    def summary(self) -> str:
        status = "PASS" if self.ok else f"FAIL ({len(self.failures)} witnesses)"
        return f"{self.suite}: {status}, {self.checked} identities checked"
