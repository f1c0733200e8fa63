import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from fcnlab.graph import build_graph
from fcnlab.harness import random_connected_graph

settings.register_profile(
    "suite",
    derandomize=True,
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("suite")


@st.composite
def small_graphs(draw, min_n=1, max_n=7):
    """Arbitrary labeled graph on up to max_n vertices."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [p for p in pairs if draw(st.booleans())]
    return build_graph(n, edges, labels=[f"v{i}" for i in range(n)])


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    """Seeded random connected graph."""
    seed = draw(st.integers(0, 10**6))
    n = draw(st.integers(min_n, max_n))
    rng = random.Random(seed)
    return random_connected_graph(rng, n, rng.choice((0.3, 0.5, 0.7)))


@pytest.fixture(scope="session")
def fcn1():
    from fcnlab.generators import fcn

    return fcn(1)


@pytest.fixture(scope="session")
def fcn2():
    from fcnlab.generators import fcn

    return fcn(2)
