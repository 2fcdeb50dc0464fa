import random

import pytest
from hypothesis import strategies as st

from neutrorank import DecisionMatrix, InValue, SvnValue

import cases

SEED = 20150417


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.fixture
def svn_matrix():
    return DecisionMatrix(
        cases.ALTERNATIVES,
        cases.CRITERIA,
        cases.WEIGHTS,
        [[SvnValue(*v) for v in row] for row in cases.SVN_ROWS],
    )


@pytest.fixture
def in_matrix():
    return DecisionMatrix(
        cases.ALTERNATIVES,
        cases.CRITERIA,
        cases.WEIGHTS,
        [[InValue.from_bounds(*v) for v in row] for row in cases.IN_ROWS],
    )


# -- random generators shared by unit and acceptance tests -------------------


def rand_svn(r):
    return SvnValue(r.random(), r.random(), r.random())


def rand_interval(r):
    lo, hi = sorted((r.random(), r.random()))
    return lo, hi


def rand_in(r):
    return InValue.from_bounds(rand_interval(r), rand_interval(r), rand_interval(r))


def rand_weights(r, n):
    raw = [r.random() + 1e-3 for _ in range(n)]
    s = sum(raw)
    ws = [x / s for x in raw]
    ws[-1] = 1.0 - sum(ws[:-1])
    return ws


def _toward(r, x, up):
    # a point between x and the relevant end of [0, 1]
    return x + (1.0 - x) * r.random() if up else x * r.random()


def rand_containing_svn(r, v):
    """A value that contains ``v``: more truth, less indeterminacy/falsity."""
    return SvnValue(_toward(r, v.t, True), _toward(r, v.i, False), _toward(r, v.f, False))


def rand_containing_in(r, v):
    def grow(p, up):
        # lower each bound (or raise it) while keeping lo <= hi
        lo, hi = p.lo, p.hi
        if up:
            hi = _toward(r, hi, True)
            lo = lo + (hi - lo) * r.random() if r.random() < 0.5 else lo
        else:
            lo = _toward(r, lo, False)
            hi = lo + (hi - lo) * r.random() if r.random() < 0.5 else hi
        return min(lo, hi), hi

    return InValue.from_bounds(grow(v.t, True), grow(v.i, False), grow(v.f, False))


# -- hypothesis strategies ---------------------------------------------------

degree = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
svn_values = st.builds(SvnValue, degree, degree, degree)
intervals = st.tuples(degree, degree).map(lambda p: tuple(sorted(p)))
in_values = st.builds(lambda t, i, f: InValue.from_bounds(t, i, f), intervals, intervals, intervals)


@st.composite
def weight_vectors(draw, n):
    raw = draw(st.lists(st.floats(min_value=0.01, max_value=1.0), min_size=n, max_size=n))
    s = sum(raw)
    ws = [x / s for x in raw]
    ws[-1] = max(0.0, 1.0 - sum(ws[:-1]))
    return ws


# -- acceptance summary --------------------------------------------------------

_criteria: dict[int, list[bool]] = {}
_titles = {
    1: "SVN arithmetic example reproduced",
    2: "interval arithmetic example reproduced",
    3: "interval geometric example reproduced",
    4: "SVN geometric example pinned to oracle, printed values shown irreproducible",
    5: "pointwise score/accuracy examples",
    6: "random property suite (>=1000 cases each, fixed seed)",
    7: "exhaustive grid oracle for comparators and extremes",
    8: "CLI contract",
}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for mark in report.keywords:
        if mark.startswith("criterion_"):
            _criteria.setdefault(int(mark.split("_")[1]), []).append(report.passed)


def pytest_collection_modifyitems(items):
    # expose the criterion number as a keyword so the report hook can see it
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            item.keywords[f"criterion_{m.args[0]}"] = True


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        results = _criteria[n]
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(
            f"criterion {n}: {status}  ({sum(results)}/{len(results)} checks)  {_titles.get(n, '')}"
        )
