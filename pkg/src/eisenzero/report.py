"""Structured pass/fail reporting shared by the verification battery,
the monotonicity checker, and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    """One verified statement: an id, the mathematical identity it anchors
    to, and the measured/expected/tolerance triple."""

    id: str
    anchor: str
    status: str                      # "pass" | "fail"
    measured: object = None          # number or list of numbers
    expected: object = None
    tolerance: float | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status,
            "measured": self.measured,
            "expected": self.expected,
            "tolerance": self.tolerance,
            "detail": self.detail,
        }


def make_check(id: str, anchor: str, measured, expected, tolerance: float,
               ok: bool, detail: str = "") -> Check:
    return Check(
        id=id, anchor=anchor, status="pass" if ok else "fail",
        measured=measured, expected=expected, tolerance=tolerance, detail=detail,
    )


@dataclass
class VerifyReport:
    """A named suite of checks; process exit status is 0 iff all pass."""

    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def n_failed(self) -> int:
        return sum(1 for c in self.checks if not c.passed)

    def to_dict(self, meta: dict | None = None) -> dict:
        out = {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }
        if meta is not None:
            out["meta"] = meta
        return out
