"""Claim reports: per-point pass/fail records with witnesses for failures."""
from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class PointResult:
    params: dict
    claims: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, object] = field(default_factory=dict)

    def check(self, name: str, ok: bool, witness=None) -> bool:
        self.claims[name] = bool(ok)
        if not ok and witness is not None:
            self.witnesses[name] = witness
        return bool(ok)

    @property
    def passed(self) -> bool:
        return all(self.claims.values())

    def to_json(self) -> dict:
        out = {"params": self.params, "claims": dict(sorted(self.claims.items())), "passed": self.passed}
        if self.witnesses:
            out["witnesses"] = dict(sorted(self.witnesses.items()))
        return out


@dataclass
class ClaimReport:
    suite: str
    case: str
    points: list[PointResult] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def add(self, params: dict) -> PointResult:
        pt = PointResult(params)
        self.points.append(pt)
        return pt

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.points)

    def failures(self) -> list[PointResult]:
        return [p for p in self.points if not p.passed]

    def sort(self) -> "ClaimReport":
        self.points.sort(key=lambda p: json.dumps(p.params, sort_keys=True))
        return self

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "case": self.case,
            "passed": self.passed,
            "n_points": len(self.points),
            "n_failed": len(self.failures()),
            "points": [p.to_json() for p in self.points],
            **({"extra": self.extra} if self.extra else {}),
        }

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.suite:<10} {self.case:<6} {len(self.points):>4} points, {len(self.failures())} failed"
