"""Verdicts with machine-checkable witnesses, and the cross-check failure type."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Certificate:
    """Tagged witness attached to a boolean verdict.

    ``kind`` names the witness shape (fractional-vertex, unreachable-point,
    failing-minor, decomposition, ...); ``data`` holds JSON-ready values.
    """

    kind: str
    data: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.kind, **self.data}


@dataclass(frozen=True)
class Verdict:
    value: bool
    certificate: Certificate | None = None
    rationale: str = ""

    def __bool__(self) -> bool:
        return self.value

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"verdict": self.value}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.rationale:
            out["rationale"] = self.rationale
        return out


class CrossCheckError(AssertionError):
    """Two routes the theory proves equivalent disagreed; this is a bug, not a verdict."""

    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report


@dataclass
class PropertyReport:
    """Named verdicts plus the (always empty on success) cross-check failure log."""

    verdicts: dict[str, Verdict] = field(default_factory=dict)
    cross_check_failures: list[str] = field(default_factory=list)
    notes: dict[str, str] = field(default_factory=dict)

    def add(self, name: str, verdict: Verdict) -> None:
        self.verdicts[name] = verdict

    def require_agreement(self, names: list[str], law: str) -> None:
        vals = {name: self.verdicts[name].value for name in names}
        if len(set(vals.values())) > 1:
            self.cross_check_failures.append(f"{law}: {vals}")

    def raise_on_failure(self) -> "PropertyReport":
        if self.cross_check_failures:
            raise CrossCheckError(
                "equivalent properties disagreed: " + "; ".join(self.cross_check_failures),
                report=self,
            )
        return self

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {name: v.to_json() for name, v in self.verdicts.items()}
        out["cross_checks"] = list(self.cross_check_failures)
        if self.notes:
            out["notes"] = dict(self.notes)
        return out
