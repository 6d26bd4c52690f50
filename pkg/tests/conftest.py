import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from probeiep.graph import Graph, ProbeGraph, independent_sets

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, frozenset(chosen))


@st.composite
def probe_graphs(draw, min_n=1, max_n=7):
    g = draw(graphs(min_n, max_n))
    # grow an independent set greedily from a random vertex order
    order = draw(st.permutations(list(range(g.n))))
    keep = draw(st.lists(st.booleans(), min_size=g.n, max_size=g.n))
    chosen: set[int] = set()
    for v, k in zip(order, keep):
        if k and not any(g.has_edge(v, u) for u in chosen):
            chosen.add(v)
    return ProbeGraph(g, frozenset(chosen))


@pytest.fixture
def paw():
    # triangle on 0, 1, 2 with the pendant 3 at 2 (labels shifted down by one)
    return Graph(4, frozenset({(0, 1), (0, 2), (1, 2), (2, 3)}))


def all_probe_graphs(g):
    for s in independent_sets(g):
        yield ProbeGraph(g, s)
