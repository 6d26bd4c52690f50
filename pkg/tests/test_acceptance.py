"""Acceptance criteria, one test per criterion.

Each test prints a single ``ACCEPTANCE <id> PASS|FAIL`` line (visible with
``pytest -v`` or ``-s``) before asserting.
"""

import itertools
import random
import time

import pytest

from probeiep import forcing, mr_classify, parallel_paths, witness
from probeiep.graph import (
    Graph,
    ProbeGraph,
    complete_bipartite,
    cycle_graph,
    emit_graph6,
    enumerate_graphs,
    enumerate_trees,
    has_k4_or_k23_topological_minor,
    independent_sets,
    make_alpha_graph,
    path_graph,
)
from probeiep.linalg import RationalMatrix, in_S_probe, nullity, rank

pytestmark = pytest.mark.acceptance


def report(capsys, cid: str, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\nACCEPTANCE {cid:<4} {'PASS' if ok else 'FAIL'}  {detail}")


def probe_graphs_upto(n_max: int, connected: bool = False, **kw):
    for n in range(1, n_max + 1):
        for g in enumerate_graphs(n, connected_only=connected):
            for s in independent_sets(g, **kw):
                yield ProbeGraph(g, s)


# ---------------------------------------------------------------------------


def test_c01_paw(capsys, paw):
    # load the compiled kernels first; the time limit is for the computation
    forcing.probe_zero_forcing_number(ProbeGraph(path_graph(2), frozenset()))
    t0 = time.perf_counter()
    bad = []
    sets = list(independent_sets(paw))
    # the six listed choices (labels shifted down by one) plus {centre}, which is independent too
    listed = [set(), {0}, {1}, {3}, {0, 3}, {1, 3}]
    assert all(frozenset(s) in sets for s in listed)
    for s in sets:
        pg = ProbeGraph(paw, s)
        z, _ = forcing.probe_zero_forcing_number(pg)
        iv = witness.mr_interval(pg)
        if z != 2 or (iv.lower, iv.upper) != (2, 2):
            bad.append((sorted(s), z, iv.lower, iv.upper))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 1.0
    report(capsys, "1", ok, f"paw: {len(sets)} choices of N, {len(bad)} failures, {dt:.2f}s (limit 1s)")
    assert ok, bad


def test_c02_paths_and_cycles(capsys):
    t0 = time.perf_counter()
    tested, bad = 0, []
    for n in range(4, 11):
        for g in (path_graph(n), cycle_graph(n)):
            for s in independent_sets(g, min_size=2):
                pg = ProbeGraph(g, s)
                z, _ = forcing.probe_zero_forcing_number(pg)
                m = witness.nullity_witness(pg)
                tested += 1
                if z != len(s) or nullity(m) != len(s) or not in_S_probe(m, pg):
                    bad.append((emit_graph6(g), sorted(s)))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 60
    report(capsys, "2", ok, f"P_n, C_n, 4<=n<=10: {tested} probe graphs, {len(bad)} failures, {dt:.1f}s (limit 60s)")
    assert ok, bad[:5]


def test_c03_nullity_witness(capsys):
    tested, bad = 0, []
    for pg in probe_graphs_upto(6, connected=True, maximal=True):
        m = witness.nullity_witness(pg)
        tested += 1
        if not in_S_probe(m, pg) or nullity(m) != len(pg.nonprobes):
            bad.append((emit_graph6(pg.graph), sorted(pg.nonprobes)))
    report(capsys, "3", not bad, f"connected n<=6, maximal N: {tested} witnesses, {len(bad)} failures")
    assert not bad, bad[:5]


def _q_ok(pg: ProbeGraph, real: witness.Realization) -> bool:
    qc = witness.construct_Q(pg, real)
    q = qc.Q
    p = real.p
    ra, rp, rq = rank(real.A), rank(qc.B_perp), rank(q)
    return (q.is_symmetric() and q.submatrix(range(p), range(pg.n)) == real.topblock
            and ra + rp <= rq <= ra + 2 * rp)


def test_c04_sandwich(capsys):
    rng = random.Random(2024)
    tested, bad = 0, []
    for pg in probe_graphs_upto(6):
        if not pg.probes:
            continue
        real = witness.random_realization(pg, seed=rng.randrange(1 << 30))
        tested += 1
        if not _q_ok(pg, real):
            bad.append((emit_graph6(pg.graph), sorted(pg.nonprobes)))

    tight = []
    # upper bound: K_{a,b}, N = the b side, A = 0, B = all ones
    for a, b in itertools.product(range(1, 4), repeat=2):
        pg = ProbeGraph(complete_bipartite(a, b), frozenset(range(a, a + b)))
        real = witness.Realization.from_blocks(RationalMatrix.zeros(a, a), RationalMatrix([[1] * b] * a))
        sb = witness.sandwich_bounds(pg, real)
        tight.append(rank(witness.construct_Q(pg, real).Q) == sb.upper)
    # lower bound: H plus isolated non-probes, B = 0
    for h in [path_graph(3), cycle_graph(4), complete_bipartite(2, 2), Graph(2, frozenset({(0, 1)}))]:
        for k in (1, 2, 3):
            g = Graph(h.n + k, h.edges)
            pg = ProbeGraph(g, frozenset(range(h.n, h.n + k)))
            a = witness.nullity_witness(ProbeGraph(h, frozenset()))
            real = witness.Realization.from_blocks(a, RationalMatrix.zeros(h.n, k))
            sb = witness.sandwich_bounds(pg, real)
            tight.append(rank(witness.construct_Q(pg, real).Q) == sb.lower)
    ok = not bad and all(tight)
    report(capsys, "4", ok, f"n<=6: {tested} random realizations, {len(bad)} failures; "
                            f"tightness exhibits {sum(tight)}/{len(tight)}")
    assert ok, bad[:5]


def test_c05_z2_characterization(capsys):
    t0 = time.perf_counter()
    tested, bad = 0, []
    for n in range(1, 8):
        for g in enumerate_graphs(n, connected_only=True):
            z, _ = forcing.zero_forcing_number(g)
            pp = parallel_paths.find_certificate_bruteforce(g) is not None
            tested += 1
            if (z == 2) != (pp and not g.is_path()):
                bad.append(emit_graph6(g))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 600
    report(capsys, "5", ok, f"connected n<=7: {tested} graphs, {len(bad)} discrepancies, {dt:.1f}s (target 600s)")
    assert ok, bad[:5]


def test_c06_recognizer_equivalence(capsys):
    tested, bad = 0, []
    corpus = [g for n in range(1, 8) for g in enumerate_graphs(n, connected_only=True)]
    corpus += [t for n in range(8, 11) for t in enumerate_trees(n)]
    for g in corpus:
        rec = parallel_paths.recognize(g)
        bf = parallel_paths.find_certificate_bruteforce(g) is not None
        tested += 1
        if rec.result != bf or (rec.result and not parallel_paths.certificate_valid(g, rec.certificate)):
            bad.append(emit_graph6(g))
    report(capsys, "6", not bad, f"connected n<=7 and trees n<=10: {tested} graphs, {len(bad)} discrepancies")
    assert not bad, bad[:5]


def test_c07_gplus_cases(capsys):
    tested, bad = 0, []
    for n in range(2, 9):
        for g in enumerate_graphs(n):
            if not parallel_paths.recognize(g):
                continue
            for x, y in itertools.combinations(range(n), 2):
                if g.has_edge(x, y):
                    continue
                pg = ProbeGraph(g, frozenset({x, y}))
                tested += 1
                dec = parallel_paths.gplus_decide(pg)
                if dec.result != parallel_paths.gplus_bruteforce(pg):
                    bad.append((emit_graph6(g), x, y, dec.case))
    report(capsys, "7", not bad, f"parallel-paths graphs n<=8: {tested} pairs, {len(bad)} discrepancies")
    assert not bad, bad[:5]


def test_c08_alpha_uniqueness(capsys):
    tested, bad = 0, []
    for r in range(3, 7):
        for p1, p2 in itertools.product((1, 2), repeat=2):
            for p3, p4 in itertools.product((0, 1, 2), repeat=2):
                legal = range(2, r - 1)
                for k in range(len(legal) + 1):
                    for interior in itertools.combinations(legal, k):
                        g = make_alpha_graph(r, p1, p2, p3, p4, interior)
                        tested += 1
                        if len(parallel_paths.path_partitions_bruteforce(g)) != 1:
                            bad.append((r, p1, p2, p3, p4, interior))
    report(capsys, "8", not bad, f"alpha sweep r<=6, p_i<=2: {tested} graphs, {len(bad)} failures")
    assert not bad, bad[:5]


def test_c09_probe_rule_equivalence(capsys):
    tested, bad = 0, []
    for pg in probe_graphs_upto(6):
        for mask in range(1 << pg.n):
            blue = [v for v in range(pg.n) if mask >> v & 1]
            tested += 1
            if forcing.probe_closure(pg, blue).blue != forcing.probe_closure_via_clique(pg, blue).blue:
                bad.append((emit_graph6(pg.graph), sorted(pg.nonprobes), blue))
    example = f"; first: {bad[0]}" if bad else ""
    report(capsys, "9", not bad, f"n<=6, all N, all blue sets: {tested} closures, {len(bad)} failures{example}")
    assert not bad, f"{len(bad)} failures, e.g. {bad[:3]}"


def test_c10_reversal_and_vertex_cut(capsys):
    probe_count, rev_bad, struct_tested, struct_bad, nonmin_fail = 0, [], 0, [], 0
    for pg in probe_graphs_upto(7):
        probe_count += 1
        hit = next(forcing.reversal_failures(pg), None)
        if hit is not None:
            rev_bad.append((emit_graph6(pg.graph), sorted(pg.nonprobes)))
        if not pg.nonprobes:
            continue
        z, _ = forcing.probe_zero_forcing_number(pg)
        if z != len(pg.nonprobes):
            continue
        struct_tested += 1
        rep = forcing.check_min_forcing_structure(pg)
        if not rep.holds:
            struct_bad.append(rep.to_json())
        if rep.nonminimum_reading_holds is False:
            nonmin_fail += 1
    ok = not rev_bad and not struct_bad
    report(capsys, "10", ok, f"n<=7: {probe_count} probe graphs, {len(rev_bad)} reversal failures; "
                             f"{struct_tested} with Z=|N|, {len(struct_bad)} disjunction failures "
                             f"(all-forcing-sets reading would fail {nonmin_fail})")
    assert ok, (rev_bad[:3], struct_bad[:3])


def test_c11_mr_le2(capsys):
    tested, bad = 0, []
    for pg in probe_graphs_upto(6):
        tested += 1
        a = mr_classify.is_mr_le2(pg)[0]
        b = mr_classify.is_mr_le2(pg, recognizer=mr_classify.complement_form_exhaustive)[0]
        if a != b:
            bad.append((emit_graph6(pg.graph), sorted(pg.nonprobes), a, b))
    report(capsys, "11", not bad, f"n<=6: {tested} probe graphs, {len(bad)} discrepancies")
    assert not bad, bad[:5]


def test_c12_mr_nminus2(capsys):
    tested, bad = 0, []
    for pg in probe_graphs_upto(7, connected=True):
        if len(pg.nonprobes) > 2:
            continue
        tested += 1
        got, tag = mr_classify.is_mr_nminus2(pg)
        if got != mr_classify.nminus2_by_characterizations(pg):
            bad.append((emit_graph6(pg.graph), sorted(pg.nonprobes), got, tag))
    cat = mr_classify.special_catalog()
    report(capsys, "12", not bad, f"connected n<=7, |N|<=2: {tested} probe graphs, {len(bad)} discrepancies "
                                  f"(special catalog n<={cat.max_n}, {len(cat.entries)} graphs)")
    assert not bad, bad[:5]


def test_c13_outerplanarity_invariant(capsys):
    tested, bad = 0, []
    for n in range(1, 8):
        for g in enumerate_graphs(n, connected_only=True):
            if parallel_paths.recognize(g):
                tested += 1
                if has_k4_or_k23_topological_minor(g):
                    bad.append(emit_graph6(g))
    report(capsys, "13", not bad, f"connected n<=7: {tested} recognized graphs, {len(bad)} with a K4/K23 subdivision")
    assert not bad, bad[:5]
