from itertools import combinations, product

import pytest
from hypothesis import strategies as st

from cprel.graphcat import Graph
from cprel.relcore import FiniteSet, Relation, standard_set


@pytest.fixture
def xyz():
    return FiniteSet("X", ("x", "y", "z"))


@pytest.fixture
def two():
    return standard_set(2)


small_sets = st.integers(min_value=0, max_value=3).map(standard_set)


@st.composite
def relations(draw, a=None, b=None):
    a = draw(small_sets) if a is None else a
    b = draw(small_sets) if b is None else b
    cells = list(product(a, b))
    chosen = draw(st.lists(st.sampled_from(cells), unique=True)) if cells else []
    return Relation(a, b, frozenset(chosen))


@st.composite
def graphs(draw, a=None, b=None, max_size=2):
    sizes = st.integers(min_value=0, max_value=max_size).map(standard_set)
    a = draw(sizes) if a is None else a
    b = draw(sizes) if b is None else b
    cells = list(product(a, b))
    vertices = [v for v in cells if draw(st.booleans())]
    edges = [e for e in combinations(vertices, 2) if draw(st.booleans())]
    return Graph(a, b, vertices, edges)


def v(*labels):
    """Shorthand for a vertex (a, b) whose components are plain labels."""
    return tuple(labels)


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
