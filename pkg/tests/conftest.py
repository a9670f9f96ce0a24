import os
from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from compfactor import load_corpus
from compfactor.graph import new_graph, parse_graph6
from compfactor.trees import enumerate_catalog

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=300)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return new_graph(n, [e for e, keep in zip(pairs, mask) if keep])


@pytest.fixture(scope="session")
def corpus():
    return [parse_graph6(line) for line in load_corpus()]


@pytest.fixture(scope="session")
def catalog2():
    return enumerate_catalog(2, 12)


@pytest.fixture(scope="session")
def catalog3():
    return enumerate_catalog(3, 12)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results.values():
            terminalreporter.write_line(line)
