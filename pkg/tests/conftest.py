import math

import numpy as np
import pytest
from hypothesis import settings

from curvkit.models import Geometry, chart_point

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    """Record one PASS/FAIL line per acceptance criterion for the run summary."""

    def record(label: str, ok: bool, detail: str = ""):
        _ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f"  ({detail})" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def sphere_at(r, n=2, axis=0):
    """Point at arclength r from the pole along the ``axis`` meridian."""
    p = np.zeros(n + 1)
    p[axis] = math.sin(r)
    p[-1] = math.cos(r)
    return p


def hyperboloid_at(r, n=2, axis=0):
    p = np.zeros(n + 1)
    p[axis] = math.sinh(r)
    p[-1] = math.cosh(r)
    return p


def model_at(geometry, r, n=2, axis=0):
    if geometry is Geometry.SPHERICAL:
        return sphere_at(r, n, axis)
    if geometry is Geometry.HYPERBOLIC:
        return hyperboloid_at(r, n, axis)
    x = np.zeros(n)
    x[axis] = r
    return chart_point(x)
