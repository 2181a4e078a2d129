"""Check reports shared by every verification routine.

A :class:`Report` is a list of named :class:`Check` records plus free-form
``data``.  Everything stored is JSON-native so ``Report.from_json(r.to_json())``
compares equal to ``r``.
"""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any

import numpy as np

SCHEMA = 1
PASS, FAIL, UNSUPPORTED = "pass", "fail", "unsupported"


def jsonable(value: Any) -> Any:
    """Convert tuples, numpy scalars/arrays and nested containers to JSON types."""
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    return value


@dataclass
class Check:
    name: str
    verdict: str
    witness: Any = None
    bounds: dict = field(default_factory=dict)
    note: str = ""

    def __post_init__(self):
        if self.verdict not in (PASS, FAIL, UNSUPPORTED):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == FAIL and self.witness is None:
            raise ValueError(f"failed check {self.name!r} must carry a witness")
        self.witness = jsonable(self.witness)
        self.bounds = jsonable(self.bounds)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS


@dataclass
class Report:
    command: str
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)
    timing: float = 0.0
    schema: int = SCHEMA

    @property
    def verdict(self) -> str:
        verdicts = {c.verdict for c in self.checks}
        if FAIL in verdicts:
            return FAIL
        if PASS in verdicts:
            return PASS
        return UNSUPPORTED

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def add(self, name: str, ok: bool, witness: Any = None, bounds: dict | None = None,
            note: str = "") -> Check:
        c = Check(name, PASS if ok else FAIL, None if ok else witness, bounds or {}, note)
        self.checks.append(c)
        return c

    def unsupported(self, name: str, note: str, bounds: dict | None = None) -> Check:
        c = Check(name, UNSUPPORTED, None, bounds or {}, note)
        self.checks.append(c)
        return c

    def merge(self, other: "Report", prefix: str = "") -> "Report":
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.verdict, c.witness, c.bounds, c.note))
        return self

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if c.verdict == FAIL), None)

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "command": self.command,
            "verdict": self.verdict,
            "checks": [
                {"name": c.name, "verdict": c.verdict, "witness": c.witness,
                 "bounds": c.bounds, "note": c.note}
                for c in self.checks
            ],
            "data": jsonable(self.data),
            "timing": self.timing,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unknown report schema {d.get('schema')!r}")
        checks = [Check(c["name"], c["verdict"], c["witness"], c["bounds"], c.get("note", ""))
                  for c in d["checks"]]
        return cls(d["command"], checks, d.get("data", {}), d.get("timing", 0.0), d["schema"])

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Report):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [f"{d['command']}: {d['verdict'].upper()}"]
        for c in d["checks"]:
            line = f"  [{c['verdict']:>11}] {c['name']}"
            if c["witness"] is not None:
                line += f"  witness={json.dumps(c['witness'])}"
            if c["note"]:
                line += f"  ({c['note']})"
            lines.append(line)
        for k, v in d["data"].items():
            lines.append(f"  {k}: {json.dumps(v)}")
        return "\n".join(lines)

    @contextmanager
    def timed(self):
        t0 = time.perf_counter()
        try:
            yield self
        finally:
            self.timing = round(time.perf_counter() - t0, 6)
