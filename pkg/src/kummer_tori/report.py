"""Suite reports and their text / JSON serialization."""
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .exact.scalars import Quad, format_scalar

STATUSES = ("pass", "fail", "skipped")


def render(value):
    """Exact values as strings: 'p/q' for rationals, 'a+b*sqrt(d)' for quadratic ones."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction, Quad)):
        return format_scalar(value)
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    if isinstance(value, dict):
        return {str(k): render(v) for k, v in value.items()}
    return str(value)


@dataclass
class Case:
    id: str
    anchor: str
    expected: object
    actual: object
    status: str = None

    def __post_init__(self):
        if self.status is None:
            self.status = "pass" if self.expected == self.actual else "fail"
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    def as_dict(self):
        return {"id": self.id, "anchor": self.anchor, "expected": render(self.expected),
                "actual": render(self.actual), "status": self.status}


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: list = field(default_factory=list)
    elapsed_ms: int = None

    def add(self, *args, **kwargs):
        self.cases.append(Case(*args, **kwargs))

    def extend(self, other):
        self.cases.extend(other.cases)

    def sorted(self):
        self.cases.sort(key=lambda c: c.id)
        return self

    @property
    def failures(self):
        return [c for c in self.cases if c.status == "fail"]

    @property
    def ok(self):
        return not self.failures

    def counts(self):
        return {s: sum(c.status == s for c in self.cases) for s in STATUSES}

    def as_dict(self, timing=False):
        out = {"suite": self.suite, "seed": self.seed}
        if timing and self.elapsed_ms is not None:
            out["elapsed_ms"] = self.elapsed_ms
        out["cases"] = [c.as_dict() for c in self.cases]
        return out


def emit_report(report, fmt="text", timing=False):
    """Serialize a report; identical inputs give identical output."""
    if fmt == "json":
        return json.dumps(report.as_dict(timing), indent=2, sort_keys=False) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"suite {report.suite} (seed {report.seed})"]
    for c in report.cases:
        d = c.as_dict()
        line = f"  {c.status.upper():4} {c.id}  [{c.anchor}]"
        if c.status == "fail":
            line += f"  expected={d['expected']} actual={d['actual']}"
        else:
            line += f"  value={d['actual']}"
        lines.append(line)
    n = report.counts()
    tail = f"{n['pass']} passed, {n['fail']} failed, {n['skipped']} skipped"
    if timing and report.elapsed_ms is not None:
        tail += f" in {report.elapsed_ms} ms"
    lines.append(tail)
    return "\n".join(lines) + "\n"
