import json
import logging
from dataclasses import dataclass, field
from typing import List, Optional

logger = logging.getLogger(__name__)

TERMINATION_NOTE = "termination (F2r) is certified only on the swept ball"


@dataclass(frozen=True)
class Failure:
    input: str
    axiom: str
    detail: str

    def to_dict(self) -> dict:
        return {"input": self.input, "axiom": self.axiom, "detail": self.detail}


@dataclass
class VerificationReport:
    """Outcome of a sweep; ``failures`` is empty iff every check passed.

    Reports from disjoint shards of the same sweep combine with ``merge``.
    """
    radius: int = 0
    edges_checked: int = 0
    max_phi_len: int = 0
    max_steps: int = 0
    failures: List[Failure] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    checks: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, word: str, axiom: str, detail: str) -> None:
        logger.debug(f"> {axiom} failure on {word!r}: {detail}")
        self.failures.append(Failure(word, axiom, detail))

    def note(self, text: str) -> None:
        if text not in self.notes:
            self.notes.append(text)

    def ran(self, check: str) -> None:
        if check not in self.checks:
            self.checks.append(check)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        merged = VerificationReport(
            radius=max(self.radius, other.radius),
            edges_checked=self.edges_checked + other.edges_checked,
            max_phi_len=max(self.max_phi_len, other.max_phi_len),
            max_steps=max(self.max_steps, other.max_steps),
            failures=self.failures + other.failures,
        )
        for text in self.notes + other.notes:
            merged.note(text)
        for check in self.checks + other.checks:
            merged.ran(check)
        return merged

    def to_dict(self) -> dict:
        return {
            "radius": self.radius,
            "edges_checked": self.edges_checked,
            "max_phi_len": self.max_phi_len,
            "max_steps": self.max_steps,
            "failures": [failure.to_dict() for failure in self.failures],
            "notes": list(self.notes),
            "checks": list(self.checks),
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        return cls(
            radius=data["radius"],
            edges_checked=data["edges_checked"],
            max_phi_len=data["max_phi_len"],
            max_steps=data["max_steps"],
            failures=[Failure(f["input"], f["axiom"], f["detail"]) for f in data["failures"]],
            notes=list(data.get("notes", [])),
            checks=list(data.get("checks", [])),
        )

    def summary(self) -> str:
        status = "OK" if self.ok else f"{len(self.failures)} failure(s)"
        lines = [
            f"radius: {self.radius}",
            f"edges checked: {self.edges_checked}",
            f"max |phi(u,z)|: {self.max_phi_len}",
            f"max rewrite steps: {self.max_steps}",
            f"checks: {', '.join(self.checks) if self.checks else '-'}",
            f"status: {status}",
        ]
        lines.extend(f"  {f.axiom} {f.input!r}: {f.detail}" for f in self.failures[:20])
        if len(self.failures) > 20:
            lines.append(f"  ... {len(self.failures) - 20} more")
        lines.extend(f"note: {text}" for text in self.notes)
        return "\n".join(lines)
