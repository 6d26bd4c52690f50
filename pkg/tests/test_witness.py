import pytest
from hypothesis import given
from hypothesis import strategies as st

from probeiep.errors import PreconditionError
from probeiep.graph import Graph, ProbeGraph, complete_bipartite, cycle_graph, path_graph
from probeiep.linalg import RationalMatrix, in_S_probe, matches_pattern, nullity, probe_order, probe_pattern, rank
from probeiep.witness import (
    RankInterval,
    Realization,
    congruent_diagonal,
    construct_Q,
    full_rank_probe_block,
    minimize_pattern_rank,
    mr_interval,
    nullity_witness,
    random_realization,
    sandwich_bounds,
    witness_envelope,
)

from .conftest import probe_graphs


@given(probe_graphs(max_n=7))
def test_nullity_witness(pg):
    m = nullity_witness(pg)
    assert in_S_probe(m, pg)
    assert nullity(m) == len(pg.nonprobes)


def test_full_rank_probe_block_shift():
    # adjacency of K2 plus I is singular; the shift must move to 2
    pg = ProbeGraph(path_graph(2), frozenset())
    a, t = full_rank_probe_block(pg)
    assert t == 2 and rank(a) == 2


@given(probe_graphs(min_n=2, max_n=6), st.integers(0, 50))
def test_Q_construction(pg, seed):
    real = random_realization(pg, seed)
    real.validate(pg)
    qc = construct_Q(pg, real)
    q = qc.Q
    p = real.p
    assert q.is_symmetric()
    assert q.submatrix(range(p), range(pg.n)) == real.topblock
    assert matches_pattern(q.submatrix(range(p), range(pg.n)), probe_pattern(pg))
    sb = sandwich_bounds(pg, real)
    assert sb.lower <= rank(q) <= sb.upper
    assert rank(congruent_diagonal(qc, real.A)) == rank(q)
    # Q reordered to original labels lies in the probe class
    order = probe_order(pg)
    inv = [0] * pg.n
    for pos, v in enumerate(order):
        inv[v] = pos
    assert in_S_probe(q.permuted(inv), pg)


def test_Q_upper_bound_tight_on_complete_bipartite():
    g = complete_bipartite(2, 3)
    pg = ProbeGraph(g, frozenset({2, 3, 4}))
    zero = RationalMatrix.zeros(2, 2)
    ones = RationalMatrix([[1] * 3] * 2)
    real = Realization.from_blocks(zero, ones)
    sb = sandwich_bounds(pg, real)
    assert rank(construct_Q(pg, real).Q) == sb.upper == 2


def test_Q_lower_bound_tight_with_isolated_nonprobes():
    g = Graph(5, frozenset({(0, 1), (1, 2)}))
    pg = ProbeGraph(g, frozenset({3, 4}))
    a = RationalMatrix([[1, 1, 0], [1, 1, 1], [0, 1, 1]])
    real = Realization.from_blocks(a, RationalMatrix.zeros(3, 2))
    sb = sandwich_bounds(pg, real)
    assert rank(construct_Q(pg, real).Q) == sb.lower == rank(a)


def test_realization_validation(paw):
    pg = ProbeGraph(paw, frozenset({0, 3}))
    bad = Realization(RationalMatrix([[1, 1, 1, 0], [2, 1, 1, 1]]))
    with pytest.raises(PreconditionError):
        bad.validate(pg)
    bad = Realization(RationalMatrix([[1, 1, 0, 0], [1, 1, 1, 1]]))
    with pytest.raises(PreconditionError):
        bad.validate(pg)


def test_rank_interval_checks():
    with pytest.raises(ValueError):
        RankInterval(3, 2)
    iv = RankInterval(2, 2)
    assert iv.exact and iv.contains(2) and not iv.contains(3)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_interval_exact_on_paths_and_cycles(n):
    pg = ProbeGraph(path_graph(n), frozenset({0, n - 1}))
    iv = mr_interval(pg)
    assert iv.lower <= n - 2 <= iv.upper
    pg = ProbeGraph(cycle_graph(n), frozenset({0, 2}))
    iv = mr_interval(pg)
    assert iv == RankInterval(n - 2, n - 2, iv.lower_source, iv.upper_source)


def test_pattern_minimizer_on_star():
    g = Graph(4, frozenset({(0, 1), (0, 2), (0, 3)}))
    pg = ProbeGraph(g, frozenset({1, 2, 3}))
    res = minimize_pattern_rank(pg, seconds=0.2)
    assert res.rank >= 1
    assert matches_pattern(res.realization.topblock, probe_pattern(pg))


def test_witness_envelope(paw):
    pg = ProbeGraph(paw, frozenset({0, 3}))
    env = witness_envelope(pg, nullity_witness(pg))
    assert env["claimed_nullity"] == 2 and env["in_class"]
    assert RationalMatrix.from_text(env["matrix"]).shape == (4, 4)
