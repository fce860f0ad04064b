import pytest
from hypothesis import strategies as st

from dagx import Dag, dag_count, dag_from_index

# 5-vertex chain with chords 0->3 and 1->4: reduced, not strongly reduced,
# not extremely reduced. The smallest separator between the first two classes.
CHORDED_CHAIN = ((0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (0, 3))


@pytest.fixture
def chorded_chain() -> Dag:
    return Dag(5, CHORDED_CHAIN)


@pytest.fixture
def diamond() -> Dag:
    return Dag(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def chain(k: int) -> Dag:
    return Dag(k, [(i, i + 1) for i in range(k - 1)])


@st.composite
def forward_dags(draw, min_n: int = 1, max_n: int = 7):
    """Random forward-labeled DAG: a uniform edge subset of {(i,j): i<j}."""
    n = draw(st.integers(min_n, max_n))
    index = draw(st.integers(0, dag_count(n) - 1))
    return dag_from_index(n, index)
