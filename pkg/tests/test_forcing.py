import itertools
import json
import os
import subprocess
import sys

import pytest
from hypothesis import given

from probeiep.errors import PreconditionError, SearchLimitError
from probeiep.graph import Graph, ProbeGraph, complete_graph, cycle_graph, enumerate_graphs, path_graph, star_graph
from probeiep.forcing import (
    all_reversals,
    check_min_forcing_structure,
    forcing_chains,
    is_probe_forcing_set,
    is_vertex_cut,
    minimum_probe_forcing_sets,
    probe_closure,
    probe_closure_via_clique,
    probe_zero_forcing_number,
    reversal,
    standard_closure,
    zero_forcing_number,
)

from .conftest import all_probe_graphs, graphs, probe_graphs


def naive_closure(g: Graph, blue, nonprobes=frozenset()):
    blue = set(blue)
    changed = True
    while changed:
        changed = False
        for v in sorted(blue):
            if v in nonprobes and not nonprobes <= blue:
                continue
            white = [u for u in g.neighbors(v) if u not in blue]
            if len(white) == 1:
                blue.add(white[0])
                changed = True
    return frozenset(blue)


def naive_z(g: Graph, nonprobes=frozenset()):
    for k in range(g.n + 1):
        for c in itertools.combinations(range(g.n), k):
            if len(naive_closure(g, c, nonprobes)) == g.n:
                return k
    raise AssertionError


@given(probe_graphs(max_n=8))
def test_probe_closure_matches_naive(pg):
    for blue in itertools.islice(itertools.combinations(range(pg.n), 2), 12):
        assert probe_closure(pg, blue).blue == naive_closure(pg.graph, blue, pg.nonprobes)


@given(graphs(max_n=8))
def test_standard_closure_matches_naive(g):
    for k in (1, 2):
        for blue in itertools.islice(itertools.combinations(range(g.n), k), 10):
            assert standard_closure(g, blue).blue == naive_closure(g, blue)


@pytest.mark.parametrize("n", range(1, 6))
def test_forcing_numbers_match_brute_force(n):
    for g in enumerate_graphs(n):
        assert zero_forcing_number(g)[0] == naive_z(g)
        for pg in all_probe_graphs(g):
            z, wit = probe_zero_forcing_number(pg)
            assert z == naive_z(g, pg.nonprobes)
            assert len(wit) == z and is_probe_forcing_set(pg, wit)


@given(probe_graphs(max_n=8))
def test_probe_closure_within_clique_closure(pg):
    for blue in itertools.islice(itertools.combinations(range(pg.n), 2), 10):
        probe = probe_closure(pg, blue).blue
        clique = probe_closure_via_clique(pg, blue).blue
        assert probe <= clique
        if len(pg.nonprobes) <= 1:
            assert probe == clique


def test_probe_rule_differs_from_clique_rule():
    # two isolated non-probes: joining them lets one force the other
    pg = ProbeGraph(Graph(2), frozenset({0, 1}))
    assert probe_closure(pg, [0]).blue == {0}
    assert probe_closure_via_clique(pg, [0]).blue == {0, 1}


def test_witness_tie_break_prefers_probes(paw):
    z, wit = probe_zero_forcing_number(ProbeGraph(paw, frozenset({0, 3})))
    assert z == 2 and wit == {1, 2}


def test_known_values():
    assert zero_forcing_number(path_graph(6))[0] == 1
    assert zero_forcing_number(cycle_graph(6))[0] == 2
    assert zero_forcing_number(complete_graph(5))[0] == 4
    assert zero_forcing_number(star_graph(5))[0] == 4


def test_search_limit():
    with pytest.raises(SearchLimitError):
        zero_forcing_number(path_graph(20))


def test_closure_rejects_bad_labels(paw):
    with pytest.raises(ValueError):
        standard_closure(paw, [7])


# ---------------------------------------------------------------------------
# chains and reversals


def test_chains_on_path():
    g = path_graph(5)
    st = standard_closure(g, [0])
    ch = forcing_chains(st, [0], n=5)
    assert ch.chains == ((0, 1, 2, 3, 4),)
    assert reversal(ch) == {4}


def test_chains_reject_incomplete_closure():
    g = cycle_graph(5)
    st = standard_closure(g, [0])
    with pytest.raises(PreconditionError):
        forcing_chains(st, [0], n=5)


@given(graphs(min_n=1, max_n=6))
def test_standard_reversal_is_forcing(g):
    # reversal of a standard forcing process forces again
    pg = ProbeGraph(g, frozenset())
    z, sets = minimum_probe_forcing_sets(pg)
    for b in sets[:3]:
        revs = all_reversals(pg, b)
        assert revs
        for rev in revs:
            assert len(rev) == z and is_probe_forcing_set(pg, rev)


def test_all_reversals_of_non_forcing_set_is_empty():
    pg = ProbeGraph(cycle_graph(5), frozenset())
    assert all_reversals(pg, [0]) == set()


def test_vertex_cut():
    assert is_vertex_cut(path_graph(3), [1])
    assert not is_vertex_cut(path_graph(3), [0])
    assert not is_vertex_cut(path_graph(2), [0, 1])


def test_structure_check_on_paw(paw):
    rep = check_min_forcing_structure(ProbeGraph(paw, frozenset({0, 3})))
    assert rep.z == 2 and rep.holds
    with pytest.raises(PreconditionError):
        check_min_forcing_structure(ProbeGraph(paw, frozenset({3})))


# ---------------------------------------------------------------------------
# kernel / fallback parity


_PARITY_SCRIPT = """
import json
from probeiep import _kernels
from probeiep.graph import enumerate_graphs, ProbeGraph, independent_sets
from probeiep.forcing import probe_zero_forcing_number
from probeiep.parallel_paths import find_certificate_bruteforce
out = []
for n in range(1, 7):
    for g in enumerate_graphs(n):
        zs = [probe_zero_forcing_number(ProbeGraph(g, s)) for s in independent_sets(g)]
        cert = find_certificate_bruteforce(g)
        out.append([[z, sorted(w)] for z, w in zs] + [cert is not None])
print(json.dumps({"numba": _kernels.NUMBA_ENABLED, "out": out}))
"""


def _run_mode(disable: str) -> dict:
    env = dict(os.environ, PROBEIEP_DISABLE_NUMBA=disable)
    proc = subprocess.run([sys.executable, "-c", _PARITY_SCRIPT], env=env,
                          capture_output=True, text=True, check=True, timeout=600)
    return json.loads(proc.stdout.strip().splitlines()[-1])


@pytest.mark.slow
def test_kernel_and_fallback_agree():
    fast, slow = _run_mode("0"), _run_mode("1")
    assert slow["numba"] is False
    assert fast["out"] == slow["out"]
