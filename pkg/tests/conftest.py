import sys

import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from cyclicpaths.core import Composition

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def compositions(draw, max_n=6, max_m=4, min_n=0):
    m = draw(st.integers(1, max_m))
    parts = draw(st.lists(st.integers(0, max_n), min_size=m, max_size=m))
    if sum(parts) > max_n or sum(parts) < min_n:
        # rescale into range while keeping the shape random
        n = draw(st.integers(min_n, max_n))
        parts = [0] * m
        for _ in range(n):
            parts[draw(st.integers(0, m - 1))] += 1
    return Composition(parts)


@st.composite
def words(draw, max_rights=6, max_ups=4):
    k = draw(st.integers(0, max_rights))
    l = draw(st.integers(0, max_ups))
    steps = ["R"] * k + ["U"] * l
    return "".join(draw(st.permutations(steps)))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
