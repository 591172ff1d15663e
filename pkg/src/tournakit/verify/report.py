"""Verification reports and their canonical JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Any


@dataclass
class Violation:
    tournament: str  # "t <n> <bits>"
    pattern: str
    detail: str

    def as_dict(self) -> dict[str, str]:
        return {"tournament": self.tournament, "pattern": self.pattern, "detail": self.detail}


@dataclass
class VerificationReport:
    check: str
    parameters: dict[str, Any]
    instances: int = 0
    violations: list[Violation] = field(default_factory=list)
    found_not_listed: list[dict[str, Any]] = field(default_factory=list)
    listed_not_found: list[dict[str, Any]] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)
    wall_time: float | None = None

    @property
    def status(self) -> str:
        return "pass" if not self.violations else "fail"

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict[str, Any]:
        from .. import __version__

        d: dict[str, Any] = {
            "check": self.check,
            "version": __version__,
            "parameters": self.parameters,
            "instances": self.instances,
            "status": self.status,
            "violations": sorted((v.as_dict() for v in self.violations), key=_sort_key),
            "diff": {
                "found_not_listed": sorted(self.found_not_listed, key=_sort_key),
                "listed_not_found": sorted(self.listed_not_found, key=_sort_key),
            },
            "summary": self.summary,
        }
        if self.wall_time is not None:
            d["wall_time"] = round(self.wall_time, 3)
        return d

    def to_json(self) -> str:
        return canonical_json(self.as_dict())


def _sort_key(item: dict[str, Any]) -> str:
    return json.dumps(item, sort_keys=True)


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def report_schema() -> dict[str, Any]:
    text = resources.files("tournakit").joinpath("data/report.schema.json").read_text()
    return json.loads(text)
