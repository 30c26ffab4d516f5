"""Check reports with counterexample witnesses; JSON round-trips exactly."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

STATUSES = ("pass", "fail", "error")


@dataclass
class Witness:
    inputs: list[str]
    lhs: str
    rhs: str
    difference: str
    identity: str = ""

    def describe(self) -> str:
        head = f"[{self.identity}] " if self.identity else ""
        return (
            f"{head}inputs: {' ; '.join(self.inputs)}\n"
            f"    lhs:  {self.lhs}\n"
            f"    rhs:  {self.rhs}\n"
            f"    diff: {self.difference}"
        )


@dataclass
class Report:
    name: str
    status: str
    witness: Witness | None = None
    checked: int = 0
    caps: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    timing: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        d = dict(d)
        w = d.get("witness")
        if w is not None:
            d["witness"] = Witness(**w)
        return cls(**d)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def text(self) -> str:
        """Deterministic one-line summary (timing deliberately excluded)."""
        caps = ", ".join(f"{k}={v}" for k, v in sorted(self.caps.items()))
        line = f"{self.status.upper():5} {self.name} (checked {self.checked}{'; ' + caps if caps else ''})"
        for n in self.notes:
            line += f"\n      note: {n}"
        if self.witness is not None:
            line += "\n    " + self.witness.describe()
        return line

    def __str__(self):
        return self.text()


def combine(name: str, reports: list[Report], caps: dict | None = None, notes=None) -> Report:
    """Fold sub-reports: fails at the first failing part, sums case counts."""
    status = "pass"
    witness = None
    total = 0
    all_notes = list(notes or [])
    timing = 0.0
    for r in reports:
        total += r.checked
        timing += r.timing
        all_notes.extend(f"{r.name}: {n}" for n in r.notes)
        if r.status != "pass" and status == "pass":
            status = r.status
            witness = r.witness
            if witness is not None and not witness.identity:
                witness = Witness(**{**asdict(witness), "identity": r.name})
            all_notes.append(f"first failing part: {r.name}")
    return Report(
        name,
        status,
        witness=witness,
        checked=total,
        caps=dict(caps or {}),
        notes=all_notes,
        details={"parts": [r.name + ":" + r.status for r in reports]},
        timing=timing,
    )
