from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from yber import catalog  # noqa: E402
from yber.core import FiniteSolution, PointMap  # noqa: E402


@pytest.fixture(scope="session")
def ex14():
    return catalog.get("ex14")


@pytest.fixture(scope="session")
def ex15():
    return catalog.get("ex15")


@pytest.fixture(scope="session")
def corpus():
    return [catalog.get(name) for name in catalog.standard_names()]


def lyubashenko(f, g, name=""):
    """r(a, b) = (f(b), g(a)), a solution whenever f and g commute."""
    n = len(f)
    return FiniteSolution.from_function(n, lambda a, b: (f[b], g[a]), name=name)


def squash(n):
    """r(a, b) = (b, b): a solution that is not right non-degenerate."""
    return FiniteSolution.from_function(n, lambda a, b: (b, b), name=f"squash{n}")


@st.composite
def commuting_pairs(draw, max_n=4):
    """Pairs (f, g) of commuting maps on a small set, g a power of f or constant at a fixed point."""
    n = draw(st.integers(1, max_n))
    f = tuple(draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))
    kind = draw(st.sampled_from(["power", "const"]))
    if kind == "const":
        fixed = [x for x in range(n) if f[x] == x]
        if fixed:
            c = draw(st.sampled_from(fixed))
            return f, tuple([c] * n)
    e = draw(st.integers(0, 3))
    g = tuple(range(n))
    for _ in range(e):
        g = tuple(f[x] for x in g)
    return f, g


def maps_of(n):
    return st.lists(st.integers(0, n - 1), min_size=n, max_size=n).map(lambda v: PointMap(tuple(v)))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
