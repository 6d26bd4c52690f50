"""Batch verification scans over enumerated graphs and probe assignments."""

from __future__ import annotations

import itertools
import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import forcing, mr_classify, parallel_paths, witness
from .graph import (
    Graph,
    ProbeGraph,
    cycle_graph,
    emit_graph6,
    enumerate_graphs,
    enumerate_trees,
    independent_sets,
    parse_graph6,
    path_graph,
)
from .linalg import in_S_probe, nullity, rank

log = logging.getLogger(__name__)

THREADS_ENV = "PROBEIEP_THREADS"
MAX_EXHIBITS = 20


@dataclass
class ScanReport:
    check: str
    params: dict
    tested: int = 0
    passed: int = 0
    failed: int = 0
    exhibits: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    def merge(self, tested: int, failures: list[dict]) -> None:
        self.tested += tested
        self.failed += len(failures)
        self.passed = self.tested - self.failed
        room = MAX_EXHIBITS - len(self.exhibits)
        if room > 0:
            self.exhibits.extend(failures[:room])

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {"check": self.check, "params": self.params, "tested": self.tested,
                "passed": self.passed, "failed": self.failed, "exhibits": self.exhibits,
                "wall_time": round(self.wall_time, 3)}


# each check: (work items for n_max, evaluate one item -> (tested, failures))
Item = str
Check = tuple[Callable[[int], Iterator[Item]], Callable[[Item], tuple[int, list[dict]]]]


def _graphs(n_max: int, connected: bool = True, n_min: int = 1) -> Iterator[Item]:
    for n in range(n_min, n_max + 1):
        for g in enumerate_graphs(n, connected_only=connected):
            yield emit_graph6(g)


def _exhibit(g: Graph, nonprobes=(), **detail) -> dict:
    return {"graph6": emit_graph6(g), "N": sorted(nonprobes), **detail}


# ---------------------------------------------------------------------------
# individual checks


def _oracle_items(n_max: int) -> Iterator[Item]:
    yield from _graphs(n_max)
    for n in range(1, max(n_max, 10) + 1):
        for t in enumerate_trees(n):
            if n > n_max:
                yield emit_graph6(t)


def _oracle_eval(item: Item) -> tuple[int, list[dict]]:
    g = parse_graph6(item)
    bf = parallel_paths.find_certificate_bruteforce(g) is not None
    rec = parallel_paths.recognize(g)
    cert_ok = not rec.result or parallel_paths.certificate_valid(g, rec.certificate)
    if rec.result != bf or not cert_ok:
        return 1, [_exhibit(g, structural=rec.result, brute_force=bf, reason=rec.reason)]
    return 1, []


def _gplus_items(n_max: int) -> Iterator[Item]:
    for n in range(2, n_max + 1):
        for g in enumerate_graphs(n):
            if parallel_paths.recognize(g):
                yield emit_graph6(g)


def _gplus_eval(item: Item) -> tuple[int, list[dict]]:
    g = parse_graph6(item)
    tested, fails = 0, []
    for x, y in itertools.combinations(g.vertices, 2):
        if g.has_edge(x, y):
            continue
        pg = ProbeGraph(g, frozenset({x, y}))
        dec = parallel_paths.gplus_decide(pg)
        bf = parallel_paths.gplus_bruteforce(pg)
        tested += 1
        if dec.result != bf:
            fails.append(_exhibit(g, (x, y), case=dec.case, decider=dec.result, brute_force=bf))
    return tested, fails


def _forcing_bounds_eval(item: Item) -> tuple[int, list[dict]]:
    g = parse_graph6(item)
    z_std, _ = forcing.zero_forcing_number(g)
    tested, fails = 0, []
    for nonprobes in independent_sets(g):
        pg = ProbeGraph(g, nonprobes)
        z, wit = forcing.probe_zero_forcing_number(pg)
        tested += 1
        ok = len(nonprobes) <= z <= g.n and z >= z_std and forcing.is_probe_forcing_set(pg, wit)
        if not ok:
            fails.append(_exhibit(g, nonprobes, z_probe=z, z_standard=z_std))
    return tested, fails


def _witness_eval(item: Item) -> tuple[int, list[dict]]:
    g = parse_graph6(item)
    tested, fails = 0, []
    for nonprobes in independent_sets(g, maximal=True):
        pg = ProbeGraph(g, nonprobes)
        m = witness.nullity_witness(pg)
        tested += 1
        if not in_S_probe(m, pg) or nullity(m) != len(nonprobes):
            fails.append(_exhibit(g, nonprobes, problem="nullity witness"))
        if not pg.probes or not nonprobes:
            continue
        real = witness.random_realization(pg, seed=tested)
        qc = witness.construct_Q(pg, real)
        p = len(pg.probes)
        top = qc.Q.submatrix(range(p), range(g.n))
        rq, ra, rp = rank(qc.Q), rank(real.A), rank(qc.B_perp)
        tested += 1
        if not (qc.Q.is_symmetric() and top == real.topblock and ra + rp <= rq <= ra + 2 * rp):
            fails.append(_exhibit(g, nonprobes, problem="Q construction", rank_Q=rq, rank_A=ra, rank_B_perp=rp))
    return tested, fails


def _probe_items(n_max: int) -> Iterator[Item]:
    yield from _graphs(n_max, connected=False)


def _reversal_eval(item: Item) -> tuple[int, list[dict]]:
    g = parse_graph6(item)
    tested, fails = 0, []
    for nonprobes in independent_sets(g):
        pg = ProbeGraph(g, nonprobes)
        tested += 1
        bad = next(forcing.reversal_failures(pg), None)
        if bad is not None:
            fails.append(_exhibit(g, nonprobes, initial=sorted(bad[0]), reversal=sorted(bad[1])))
    return tested, fails


def _vertexcut_eval(item: Item) -> tuple[int, list[dict]]:
    g = parse_graph6(item)
    tested, fails = 0, []
    for nonprobes in independent_sets(g, min_size=1):
        pg = ProbeGraph(g, nonprobes)
        z, _ = forcing.probe_zero_forcing_number(pg)
        if z != len(nonprobes):
            continue
        tested += 1
        report = forcing.check_min_forcing_structure(pg)
        if not report.holds:
            fails.append(report.to_json())
    return tested, fails


def _mr_eval(item: Item) -> tuple[int, list[dict]]:
    g = parse_graph6(item)
    tested, fails = 0, []
    for nonprobes in independent_sets(g):
        pg = ProbeGraph(g, nonprobes)
        plain = witness.mr_interval(pg, use_characterizations=False)
        cls = mr_classify.classify(pg)
        tested += 1
        if cls.value is not None and not plain.contains(cls.value):
            fails.append(_exhibit(g, nonprobes, verdict=cls.verdict.value, value=cls.value,
                                  interval=[plain.lower, plain.upper]))
        if g.is_connected() and len(nonprobes) <= 2:
            tested += 1
            got, tag = mr_classify.is_mr_nminus2(pg)
            want = mr_classify.nminus2_by_characterizations(pg)
            if got != want:
                fails.append(_exhibit(g, nonprobes, problem="n-2 characterization", case_analysis=got, characterizations=want, case=tag))
    return tested, fails


def _path_cycle_items(n_max: int) -> Iterator[Item]:
    for n in range(4, n_max + 1):
        yield emit_graph6(path_graph(n))
        yield emit_graph6(cycle_graph(n))


def _path_cycle_eval(item: Item) -> tuple[int, list[dict]]:
    g = parse_graph6(item)
    tested, fails = 0, []
    for nonprobes in independent_sets(g, min_size=2):
        pg = ProbeGraph(g, nonprobes)
        z, _ = forcing.probe_zero_forcing_number(pg)
        m = witness.nullity_witness(pg)
        tested += 1
        if z != len(nonprobes) or nullity(m) != len(nonprobes) or not in_S_probe(m, pg):
            fails.append(_exhibit(g, nonprobes, z=z, witness_nullity=nullity(m)))
    return tested, fails


def _row_z2_eval(item: Item) -> tuple[int, list[dict]]:
    g = parse_graph6(item)
    z, _ = forcing.zero_forcing_number(g)
    pp = parallel_paths.find_certificate_bruteforce(g) is not None
    if (z == 2) != (pp and not g.is_path()):
        return 1, [_exhibit(g, z=z, two_parallel_paths=pp, path=g.is_path())]
    return 1, []


CHECKS: dict[str, Check] = {
    "oracle-equivalence": (_oracle_items, _oracle_eval),
    "gplus-cases": (_gplus_items, _gplus_eval),
    "forcing-bounds": (_probe_items, _forcing_bounds_eval),
    "witness-ranks": (_graphs, _witness_eval),
    "reversal": (_probe_items, _reversal_eval),
    "vertexcut": (_probe_items, _vertexcut_eval),
    "mr-consistency": (_probe_items, _mr_eval),
    "path-cycle": (_path_cycle_items, _path_cycle_eval),
    "row-z2": (_graphs, _row_z2_eval),
}


def resolve_threads(flag: int | None) -> int:
    """Flag value if given, else the environment override, else 1."""
    if flag is not None:
        return max(1, flag)
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            log.warning("ignoring non-integer %s=%r", THREADS_ENV, env)
    return 1


def run_scan(check: str, n_max: int, threads: int = 1, progress: Callable[[str], None] | None = None) -> ScanReport:
    """Run a registered check; the report content does not depend on ``threads``."""
    if check not in CHECKS:
        raise KeyError(f"unknown check {check!r}; known: {', '.join(sorted(CHECKS))}")
    items_fn, eval_fn = CHECKS[check]
    report = ScanReport(check, {"n_max": n_max, "corpus": "enumerated"})
    start = time.perf_counter()
    items = list(items_fn(n_max))
    if threads <= 1:
        results = map(eval_fn, items)
        _collect(report, results, len(items), progress)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            # map preserves input order, so the merge is deterministic
            _collect(report, pool.map(eval_fn, items), len(items), progress)
    report.wall_time = time.perf_counter() - start
    return report


def _collect(report: ScanReport, results, total: int, progress) -> None:
    step = max(1, total // 20)
    for k, (tested, failures) in enumerate(results, start=1):
        report.merge(tested, failures)
        if progress and (k % step == 0 or k == total):
            progress(f"{report.check}: {k}/{total} items, {report.failed} failures")
