"""Pass/fail reports for the law checkers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Case:
    id: str
    law: str
    status: str  # "pass" | "fail"
    witness: Any = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        d = {"id": self.id, "law": self.law, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class Report:
    suite: str
    ring: str = ""
    seed: int = 0
    cases: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def add(self, law: str, ok: bool, witness: Any = None, id: str | None = None) -> Case:
        case = Case(id or f"{len(self.cases):04d}", law, "pass" if ok else "fail", None if ok else witness)
        self.cases.append(case)
        return case

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.cases:
            self.cases.append(Case(prefix + c.id, c.law, c.status, c.witness))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def failures(self) -> list:
        return [c for c in self.cases if not c.passed]

    def to_dict(self) -> dict:
        d = {
            "suite": self.suite,
            "ring": self.ring,
            "seed": self.seed,
            "cases": [c.to_dict() for c in sorted(self.cases, key=lambda c: c.id)],
        }
        if self.summary:
            d["summary"] = self.summary
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False, default=str) + "\n"

    def to_text(self) -> str:
        lines = [f"suite {self.suite} ring {self.ring} seed {self.seed}"]
        for c in sorted(self.cases, key=lambda c: c.id):
            line = f"  [{c.status.upper():4}] {c.id} {c.law}"
            if c.witness is not None:
                line += f"  witness={c.witness}"
            lines.append(line)
        for k, v in self.summary.items():
            lines.append(f"  {k}: {v}")
        n_fail = len(self.failures)
        lines.append(f"{len(self.cases) - n_fail}/{len(self.cases)} passed")
        return "\n".join(lines) + "\n"
