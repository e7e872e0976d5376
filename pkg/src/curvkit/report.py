"""Sweep reports and their JSON/CSV serialization."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field

CSV_COLUMNS = ("suite", "geometry", "n", "sample_index", "residual", "pass")


@dataclass
class FailureRecord:
    sample_index: int
    geometry: str
    inputs: list
    expected: float | None
    actual: float | None
    residual: float
    reason: str = ""


@dataclass
class SampleRow:
    geometry: str
    sample_index: int
    residual: float
    passed: bool


@dataclass
class SweepReport:
    suite: str
    n: int
    seed: int
    tol: float
    geometries: list[str]
    samples_run: int = 0
    max_residual: float = 0.0
    mean_residual: float = 0.0
    failures: list[FailureRecord] = field(default_factory=list)
    rows: list[SampleRow] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "pass" if not self.failures else "fail"

    @property
    def passed(self) -> bool:
        return not self.failures

    @classmethod
    def from_rows(cls, suite, n, seed, tol, geometries, rows, failures) -> "SweepReport":
        """Aggregate per-sample rows; ordering of the inputs does not matter."""
        rows = sorted(rows, key=lambda r: (geometries.index(r.geometry), r.sample_index))
        failures = sorted(failures, key=lambda f: (geometries.index(f.geometry), f.sample_index))
        finite = [r.residual for r in rows if math.isfinite(r.residual)]
        max_res = max((r.residual for r in rows), default=0.0)
        mean_res = math.fsum(finite) / len(finite) if finite else 0.0
        return cls(
            suite=suite,
            n=n,
            seed=seed,
            tol=tol,
            geometries=list(geometries),
            samples_run=len(rows),
            max_residual=max_res,
            mean_residual=mean_res,
            failures=failures,
            rows=rows,
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SweepReport":
        d = dict(d)
        d.pop("verdict", None)
        d["failures"] = [FailureRecord(**f) for f in d.get("failures", [])]
        d["rows"] = [SampleRow(**r) for r in d.get("rows", [])]
        return cls(**d)

    def summary(self) -> str:
        return (
            f"{self.suite}: {self.verdict} ({self.samples_run} samples, "
            f"max residual {self.max_residual:.3e}, {len(self.failures)} failures)"
        )


def to_json(report: SweepReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def from_json(text: str) -> SweepReport:
    return SweepReport.from_dict(json.loads(text))


def to_csv(report: SweepReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in report.rows:
        w.writerow([report.suite, r.geometry, report.n, r.sample_index, repr(r.residual), str(r.passed).lower()])
    return buf.getvalue()


def emit(report: SweepReport, fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    raise ValueError(f"unknown report format {fmt!r}")
