"""Verification reports: canonical JSON and a short markdown summary."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any

from .complex import is_top_concentrated


@dataclass
class OracleRow:
    name: str
    expected: Any
    got: Any
    passed: bool

    @classmethod
    def compare(cls, name: str, expected, got) -> OracleRow:
        return cls(name, expected, got, expected == got)


@dataclass
class VerificationReport:
    command: str
    subject: str
    betti: list[int]
    oracles: list[OracleRow] = field(default_factory=list)
    input_sha256: str = ""
    notes: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)
    require_top_concentration: bool = True
    timing_s: float = 0.0

    @property
    def top_dimension(self) -> int:
        return len(self.betti) - 1

    @property
    def top_concentrated(self) -> bool:
        return is_top_concentrated(self.betti)

    @property
    def passed(self) -> bool:
        ok = all(r.passed for r in self.oracles)
        return ok and (self.top_concentrated or not self.require_top_concentration)

    def hashable(self) -> dict:
        """Everything except timing; byte-stable across runs."""
        return {
            "command": self.command,
            "subject": self.subject,
            "betti": list(self.betti),
            "top_dimension": self.top_dimension,
            "top_concentrated": self.top_concentrated,
            "top_concentration_required": self.require_top_concentration,
            "oracles": [
                {"name": r.name, "expected": r.expected, "got": r.got, "pass": r.passed} for r in self.oracles
            ],
            "input_sha256": self.input_sha256,
            "notes": list(self.notes),
            "details": self.details,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps({"report": self.hashable(), "timing": {"seconds": round(self.timing_s, 6)}}, sort_keys=True, indent=1)

    def to_markdown(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        lines = [
            f"## {self.command}: {self.subject}",
            "",
            f"- reduced Betti numbers: ({', '.join(map(str, self.betti))})",
            f"- top dimension: {self.top_dimension}",
            f"- top-concentrated: {'yes' if self.top_concentrated else 'no'}"
            + ("" if self.require_top_concentration else " (informational)"),
        ]
        for k, v in sorted(self.details.items()):
            lines.append(f"- {k}: {v}")
        for note in self.notes:
            lines.append(f"- note: {note}")
        if self.oracles:
            lines += ["", "| check | expected | got | verdict |", "|---|---|---|---|"]
            for r in self.oracles:
                lines.append(f"| {r.name} | {r.expected} | {r.got} | {'pass' if r.passed else 'FAIL'} |")
        lines += ["", f"**{verdict}** ({self.timing_s:.3f} s)"]
        return "\n".join(lines)


def sha256_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()
