"""Shared result record for verification checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of one check at one prime: verdict plus the witnesses that decided it."""

    theorem_id: str
    p: int
    params: dict[str, int] = field(default_factory=dict)
    computed: dict[str, object] = field(default_factory=dict)
    verdict: str = "pass"  # "pass" | "fail" | "skipped"
    reason: str | None = None
    elapsed: float = 0.0

    def ok(self) -> bool:
        return self.verdict != "fail"


def summarize(reports) -> dict[str, int]:
    """Aggregate verdict counts over a sweep."""
    out = {"pass": 0, "fail": 0, "skipped": 0}
    for r in reports:
        out[r.verdict] += 1
    return out
