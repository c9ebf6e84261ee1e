"""Structured pass/fail reports shared by the checker suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass(frozen=True)
class Check:
    check_id: str
    status: str
    detail: str = ""
    witness: Any = None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"id": self.check_id, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass(frozen=True)
class Report:
    """One suite run: checks sorted by id, optional data payload and notes.

    Failing checks always carry a concrete witness.  Assembly is
    deterministic, so a report serializes identically across runs.
    """

    suite: str
    checks: tuple[Check, ...]
    data: Mapping[str, Any] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
            "summary": self.counts(),
            "data": dict(self.data),
            "notes": list(self.notes),
        }

    def render_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        for note in self.notes:
            lines.append(f"note: {note}")
        for key, value in self.data.items():
            lines.append(f"{key}: {_render_value(value)}")
        width = max((len(c.check_id) for c in self.checks), default=0)
        for c in self.checks:
            line = f"  {c.check_id.ljust(width)}  {c.status}"
            if c.detail:
                line += f"  {c.detail}"
            lines.append(line)
            if c.witness is not None and c.status != PASS:
                lines.append(f"    witness: {c.witness}")
        counts = self.counts()
        lines.append(
            f"summary: {counts[PASS]} pass, {counts[FAIL]} fail, "
            f"{counts[SKIPPED]} skipped"
        )
        return "\n".join(lines)


def _render_value(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ", ".join(str(v) for v in value)
    if isinstance(value, dict):
        return " | ".join(f"{k}: {_render_value(v)}" for k, v in value.items())
    return str(value)


def make_report(
    suite: str,
    checks: Iterable[Check],
    data: Mapping[str, Any] | None = None,
    notes: Iterable[str] = (),
) -> Report:
    ordered = tuple(sorted(checks, key=lambda c: c.check_id))
    return Report(suite=suite, checks=ordered, data=dict(data or {}), notes=tuple(notes))
