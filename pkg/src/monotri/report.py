"""Structured outcomes for identity and conjecture checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Result of checking one identity over a grid of inputs.

    ``status`` is "pass"/"fail" for proven identities, "consistent"/
    "inconsistent" for conjectures, or "info" for report-only checks.  A
    failed report always carries the first counterexample (inputs plus both
    side values as decimal strings).  ``timing_secs`` is diagnostic only and
    excluded from :meth:`to_dict` so that serialized reports are reproducible.
    """

    name: str
    grid: str
    checked: int
    failures: int
    status: str
    counterexample: dict | None = None
    metadata: dict = field(default_factory=dict)
    timing_secs: float = 0.0

    def __post_init__(self):
        if self.failures > 0 and self.counterexample is None:
            raise ValueError("a failed report must carry a counterexample")

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "grid": self.grid,
            "checked": self.checked,
            "failures": self.failures,
            "status": self.status,
            "counterexample": self.counterexample,
            "metadata": self.metadata,
        }

    def claim(self) -> str:
        if self.status == "consistent":
            return "conjecture: consistent at tested scale"
        if self.status == "inconsistent":
            return "conjecture: counterexample found"
        if self.status == "info":
            return "informational"
        return "identity " + ("verified" if self.passed else "FAILED")


def render_table(reports: list[VerificationReport]) -> str:
    """Fixed-width text table, one line per report plus counterexamples."""
    name_w = max([len(r.name) for r in reports] + [8])
    lines = [f"{'identity':<{name_w}}  {'checked':>7}  {'failed':>6}  result"]
    for r in reports:
        lines.append(f"{r.name:<{name_w}}  {r.checked:>7}  {r.failures:>6}  {r.claim()}")
        if r.counterexample is not None:
            lines.append(f"{'':<{name_w}}  counterexample: {r.counterexample}")
    return "\n".join(lines)
