from __future__ import annotations

import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from degdev.graph import BipartiteLayout, Graph, pair_index

settings.register_profile("default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    pairs = pair_index(n)
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, k in zip(pairs, keep) if k))


@st.composite
def bipartite_graphs(draw, max_class: int = 5):
    a = draw(st.integers(1, max_class))
    b = draw(st.integers(1, max_class))
    pairs = [(u, v) for u in range(a) for v in range(a, a + b)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(a + b, frozenset(p for p, k in zip(pairs, keep) if k)), BipartiteLayout(a)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.LOG:
        terminalreporter.section("acceptance criteria")
        for line in mod.LOG:
            terminalreporter.write_line(line)
