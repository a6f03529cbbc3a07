"""Verification reports: lists of named checks with pass/fail state.

Every verifier in the package returns a :class:`Report`.  Checks carry the
instance label plus printable left/right sides so a failing run shows what
was compared; reports carry the metadata needed to reproduce them (seed,
prime, specialization points) whenever randomness was involved.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List


@dataclass
class Check:
    instance: str
    lhs: str
    rhs: str
    passed: bool
    note: str = ""

    def to_dict(self) -> dict:
        out = {"instance": self.instance, "lhs": self.lhs, "rhs": self.rhs, "pass": self.passed}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Report:
    title: str
    checks: List[Check] = field(default_factory=list)
    meta: Dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, instance: str, lhs: object, rhs: object, passed: bool, note: str = "") -> Check:
        check = Check(instance, str(lhs), str(rhs), bool(passed), note)
        self.checks.append(check)
        return check

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "pass": self.passed,
            "meta": self.meta,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def lines(self) -> List[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"[{status}] {self.title}/{c.instance}: {c.lhs} == {c.rhs}"
            if c.note:
                line += f"  ({c.note})"
            out.append(line)
        out.append(f"== {self.title}: {'ok' if self.passed else 'FAILED'} "
                   f"({sum(c.passed for c in self.checks)}/{len(self.checks)} checks)")
        return out
