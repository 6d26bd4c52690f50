import itertools
import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from probeiep.errors import Graph6Error, SearchLimitError
from probeiep.graph import (
    Graph,
    ProbeGraph,
    are_isomorphic,
    blocks,
    bridges,
    canonical_form,
    complement,
    completions,
    complete_bipartite,
    complete_graph,
    core_vertices,
    cycle_graph,
    emit_graph6,
    enumerate_graphs,
    enumerate_trees,
    has_k4_or_k23_topological_minor,
    independent_sets,
    induced_subgraph,
    is_outerplanar,
    make_alpha_graph,
    parse_graph6,
    path_graph,
    star_graph,
    wheel_graph,
)

from .conftest import graphs


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


# ---------------------------------------------------------------------------
# graph6


@given(graphs(max_n=12))
def test_graph6_roundtrip(g):
    assert parse_graph6(emit_graph6(g)) == g


@given(graphs(max_n=10))
def test_graph6_agrees_with_networkx(g):
    ours = emit_graph6(g)
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == theirs


def test_graph6_known_strings(paw):
    assert emit_graph6(complete_graph(4)) == "C~"
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)
    assert emit_graph6(paw) == "Cx"


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("C", 1),            # truncated edge data
    ("C~~", 2),          # trailing byte
    ("A`", 1),           # nonzero padding bits
    ("C\x7f", 1),        # byte outside the printable range
])
def test_graph6_errors_report_offset(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset
    assert f"byte offset {offset}" in str(info.value)


def test_graph6_rejects_large_n():
    with pytest.raises(Graph6Error):
        parse_graph6("~?@?" + "?" * 10)


# ---------------------------------------------------------------------------
# basics


def test_invalid_edges_rejected():
    with pytest.raises(ValueError):
        Graph(3, frozenset({(0, 0)}))
    with pytest.raises(ValueError):
        Graph(3, frozenset({(0, 3)}))


def test_probe_graph_requires_independent_nonprobes(paw):
    ProbeGraph(paw, frozenset({0, 3}))
    with pytest.raises(ValueError, match="non-probe set must be independent"):
        ProbeGraph(paw, frozenset({0, 1}))


def test_induced_subgraph_of_paw_is_triangle(paw):
    sub, labels = induced_subgraph(paw, [0, 1, 2])
    assert sub == complete_graph(3)
    assert labels == [0, 1, 2]


def test_completions_of_paw(paw):
    pg = ProbeGraph(paw, frozenset({0, 3}))
    got = list(completions(pg))
    assert got[0] == paw
    assert len(got) == 2 and got[1].has_edge(0, 3)


@given(graphs(max_n=8))
def test_independent_sets_match_definition(g):
    sets = set(independent_sets(g))
    brute = {frozenset(c) for k in range(g.n + 1) for c in itertools.combinations(range(g.n), k)
             if not any(g.has_edge(u, v) for u, v in itertools.combinations(c, 2))}
    assert sets == brute
    maximal = set(independent_sets(g, maximal=True))
    assert maximal == {s for s in brute if not any(s < t for t in brute)}


@given(graphs(max_n=9))
def test_structure_helpers_match_networkx(g):
    h = to_nx(g)
    assert bridges(g) == {tuple(sorted(e)) for e in nx.bridges(h)}
    assert sorted(map(len, g.components())) == sorted(map(len, nx.connected_components(h)))
    cyc = set()
    for comp in nx.biconnected_components(h):
        if len(comp) >= 3:
            cyc |= comp
    assert core_vertices(g) == frozenset(cyc)
    ours = sorted(sorted(b) for b in blocks(g))
    theirs = sorted(sorted(c) for c in nx.biconnected_components(h) if len(c) >= 3)
    assert ours == theirs


# ---------------------------------------------------------------------------
# enumeration and isomorphism


@pytest.mark.parametrize("n, total, connected", [
    (1, 1, 1), (2, 2, 1), (3, 4, 2), (4, 11, 6), (5, 34, 21), (6, 156, 112), (7, 1044, 853),
])
def test_enumeration_counts(n, total, connected):
    assert sum(1 for _ in enumerate_graphs(n)) == total
    assert sum(1 for _ in enumerate_graphs(n, connected_only=True)) == connected


def test_tree_counts():
    assert [sum(1 for _ in enumerate_trees(n)) for n in range(1, 11)] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
    for t in enumerate_trees(7):
        assert t.is_forest() and t.is_connected()


def test_enumeration_limit():
    with pytest.raises(SearchLimitError):
        list(enumerate_graphs(9))


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_canonical_form_is_relabeling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(min_n=1, max_n=7), graphs(min_n=1, max_n=7))
def test_isomorphism_matches_networkx(g, h):
    assert are_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


# ---------------------------------------------------------------------------
# outerplanarity and minors


@given(graphs(max_n=9))
def test_outerplanar_iff_no_k4_k23_subdivision(g):
    assert bool(is_outerplanar(g)) == (not has_k4_or_k23_topological_minor(g))


@given(graphs(max_n=8))
def test_outerplanar_matches_planarity_of_apex(g):
    # G is outerplanar iff G plus a universal vertex is planar
    h = to_nx(g)
    h.add_edges_from((g.n, v) for v in range(g.n))
    assert bool(is_outerplanar(g)) == nx.check_planarity(h)[0]


def test_minor_examples():
    assert has_k4_or_k23_topological_minor(complete_graph(4))
    assert has_k4_or_k23_topological_minor(complete_bipartite(2, 3))
    assert has_k4_or_k23_topological_minor(wheel_graph(5))
    assert not has_k4_or_k23_topological_minor(cycle_graph(7))
    assert not has_k4_or_k23_topological_minor(star_graph(5))


def test_outer_cycle_of_fan():
    g = Graph(5, frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)}))
    res = is_outerplanar(g)
    assert res and sorted(res.outer_cycle) == [0, 1, 2, 3, 4]


# ---------------------------------------------------------------------------
# constructors


def test_basic_constructors():
    assert path_graph(5).m == 4 and path_graph(5).is_path()
    assert cycle_graph(5).m == 5
    assert complete_graph(5).m == 10
    assert complete_bipartite(2, 3).m == 6
    assert complement(complete_graph(4)).m == 0


def test_alpha_graph_shape():
    g = make_alpha_graph(5, 1, 1, 1, 1, [3])
    assert g.n == 9  # r + p1 + p2 + p3 + p4
    assert g.is_connected() and bool(is_outerplanar(g))
    assert g.has_edge(0, 3)
    assert sorted(g.degree(v) for v in range(5, 9)) == [1, 1, 1, 1]


def test_random_graph_relabel_roundtrip():
    rnd = random.Random(3)
    g = Graph(7, frozenset((u, v) for u, v in itertools.combinations(range(7), 2) if rnd.random() < 0.4))
    perm = list(range(7))
    rnd.shuffle(perm)
    inv = [0] * 7
    for i, p in enumerate(perm):
        inv[p] = i
    assert g.relabel(perm).relabel(inv) == g
