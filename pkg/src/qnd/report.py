"""Verification report records shared by every suite and the CLI."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

SCHEMA_VERSION = 1

PASS, FAIL, INFO = "pass", "fail", "info"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""
    numeric: list | None = None

    @classmethod
    def expect(cls, name, ok, detail="", numeric=None):
        return cls(name, PASS if ok else FAIL, detail, numeric)

    @property
    def ok(self):
        return self.status != FAIL


@dataclass
class SuiteReport:
    suite: str
    checks: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks):
        self.checks.extend(checks)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.ok]

    def to_dict(self):
        return {"schema": SCHEMA_VERSION, "suite": self.suite, "ok": self.ok,
                "meta": self.meta, "checks": [asdict(c) for c in self.checks]}

    def summary(self) -> str:
        n_pass = sum(c.status == PASS for c in self.checks)
        n_fail = sum(c.status == FAIL for c in self.checks)
        lines = [f"[{self.suite}] {n_pass} pass, {n_fail} fail, {len(self.checks)} checks"]
        lines += [f"  FAIL {c.name}: {c.detail}" for c in self.failures]
        return "\n".join(lines)


def _default(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, complex):
        return [o.real, o.imag]
    if hasattr(o, "item"):
        return o.item()
    raise TypeError(f"not serializable: {type(o).__name__}")


def dumps(obj) -> str:
    return json.dumps(obj, default=_default, indent=1, sort_keys=True, ensure_ascii=False)


def merge(suite: str, reports, meta=None) -> SuiteReport:
    out = SuiteReport(suite, meta=dict(meta or {}))
    for r in reports:
        for c in r.checks:
            out.add(Check(f"{r.suite}/{c.name}", c.status, c.detail, c.numeric))
    return out
