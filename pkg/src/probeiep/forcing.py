"""Standard and probe zero forcing: closures, forcing numbers, chains and reversals."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from . import _kernels
from .errors import PreconditionError, SearchLimitError
from .graph import Graph, ProbeGraph, _bits, mask_of

SEARCH_LIMIT = 12
STRUCTURE_LIMIT = 9


@dataclass(frozen=True)
class ForcingState:
    blue: frozenset[int]
    log: tuple[tuple[int, int], ...] = ()

    def is_complete(self, n: int) -> bool:
        return len(self.blue) == n


@dataclass(frozen=True)
class ForcingChains:
    chains: tuple[tuple[int, ...], ...]


def _run(adj: tuple[int, ...], blue: int, probe_mask: int, nonprobe_mask: int) -> ForcingState:
    log = []
    n = len(adj)
    while True:
        all_np_blue = (blue & nonprobe_mask) == nonprobe_mask
        for v in range(n):
            if not (blue >> v) & 1:
                continue
            if not ((probe_mask >> v) & 1 or all_np_blue):
                continue
            white = adj[v] & ~blue
            if white and not white & (white - 1):
                u = white.bit_length() - 1
                blue |= white
                log.append((v, u))
                break
        else:
            return ForcingState(frozenset(_bits(blue)), tuple(log))


def _check_subset(n: int, blue: Iterable[int]) -> int:
    mask = mask_of(blue)
    if mask >> n:
        raise ValueError("initial set contains a label outside the graph")
    return mask


def standard_closure(g: Graph, blue: Iterable[int]) -> ForcingState:
    """Standard colour-change closure; the lowest eligible forcer acts first."""
    full = (1 << g.n) - 1
    return _run(g.adj, _check_subset(g.n, blue), full, 0)


def probe_closure(pg: ProbeGraph, blue: Iterable[int]) -> ForcingState:
    """Probe colour-change closure.

    Probes force as usual.  A non-probe may force only once every non-probe
    is blue.
    """
    return _run(pg.graph.adj, _check_subset(pg.n, blue), pg.probe_mask, pg.nonprobe_mask)


def probe_closure_via_clique(pg: ProbeGraph, blue: Iterable[int]) -> ForcingState:
    """Standard closure on the graph with every non-probe pair joined."""
    return standard_closure(pg.cliqued(), blue)


def closure_mask(adj_array, blue: int, probe_mask: int, nonprobe_mask: int) -> int:
    return int(_kernels.closure(adj_array, blue, probe_mask, nonprobe_mask))


# ---------------------------------------------------------------------------
# forcing numbers


def _min_forcing(adj_array, n: int, probe_mask: int, nonprobe_mask: int, limit: int) -> tuple[int, frozenset[int]]:
    if n > min(limit, _kernels.MAX_KERNEL_N):
        raise SearchLimitError(f"forcing search limited to n <= {limit}")
    for size in range(n + 1):
        hit = int(_kernels.min_forcing_of_size(adj_array, probe_mask, nonprobe_mask, size))
        if hit >= 0:
            if hit & nonprobe_mask:
                hit = _fewest_nonprobes(adj_array, probe_mask, nonprobe_mask, size)
            return size, frozenset(_bits(hit))
    raise AssertionError("the full vertex set always forces")


def _fewest_nonprobes(adj_array, probe_mask: int, nonprobe_mask: int, size: int) -> int:
    """Witness tie-break: fewest non-probes first, then lexicographic order."""
    full = (1 << len(adj_array)) - 1
    probes, nonprobes = list(_bits(probe_mask)), list(_bits(nonprobe_mask))
    for k in range(min(size, len(nonprobes)) + 1):
        for ps in itertools.combinations(probes, size - k):
            for ns in itertools.combinations(nonprobes, k):
                mask = mask_of(ps) | mask_of(ns)
                if closure_mask(adj_array, mask, probe_mask, nonprobe_mask) == full:
                    return mask
    raise AssertionError("a forcing set of this size exists")


def zero_forcing_number(g: Graph, limit: int = SEARCH_LIMIT) -> tuple[int, frozenset[int]]:
    """Exact Z(G) and the first minimum forcing set in colex mask order."""
    return _min_forcing(g.adj_array, g.n, (1 << g.n) - 1, 0, limit)


def probe_zero_forcing_number(pg: ProbeGraph, limit: int = SEARCH_LIMIT) -> tuple[int, frozenset[int]]:
    """Exact probe forcing number and a witness with as few non-probes as possible."""
    return _min_forcing(pg.graph.adj_array, pg.n, pg.probe_mask, pg.nonprobe_mask, limit)


def is_probe_forcing_set(pg: ProbeGraph, blue: Iterable[int]) -> bool:
    full = (1 << pg.n) - 1
    return closure_mask(pg.graph.adj_array, mask_of(blue), pg.probe_mask, pg.nonprobe_mask) == full


def minimum_probe_forcing_sets(pg: ProbeGraph, limit: int = SEARCH_LIMIT) -> tuple[int, list[frozenset[int]]]:
    """All minimum probe forcing sets."""
    z, _ = probe_zero_forcing_number(pg, limit)
    full = (1 << pg.n) - 1
    adj = pg.graph.adj_array
    sets = [frozenset(c) for c in itertools.combinations(range(pg.n), z)
            if closure_mask(adj, mask_of(c), pg.probe_mask, pg.nonprobe_mask) == full]
    return z, sets


# ---------------------------------------------------------------------------
# chains and reversals


def forcing_chains(state: ForcingState, initial: Iterable[int], n: int | None = None) -> ForcingChains:
    """Rebuild forcing chains from a complete force log.

    ``n`` defaults to the size of the final blue set; pass the vertex count to
    have an incomplete closure rejected.
    """
    initial = sorted(set(initial))
    if n is not None and len(state.blue) != n:
        raise PreconditionError("closure is not the whole vertex set; chains are undefined")
    if not set(initial) <= state.blue:
        raise PreconditionError("initial set is not contained in the final blue set")
    succ = dict(state.log)
    chains = []
    for start in initial:
        chain = [start]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        chains.append(tuple(chain))
    covered = sum(len(c) for c in chains)
    if covered != len(state.blue):
        raise PreconditionError("force log does not match the initial set")
    return ForcingChains(tuple(chains))


def reversal(chains: ForcingChains) -> frozenset[int]:
    """Terminal vertices of the chains."""
    return frozenset(c[-1] for c in chains.chains)


def all_reversals(pg: ProbeGraph, blue: Iterable[int]) -> set[frozenset[int]]:
    """Reversals over every admissible order of forces starting from ``blue``.

    Only complete runs contribute; the empty set is returned for non-forcing
    initial sets.
    """
    n = pg.n
    adj = pg.graph.adj
    full = (1 << n) - 1
    probe_mask, nonprobe_mask = pg.probe_mask, pg.nonprobe_mask
    start = mask_of(blue)
    results: set[frozenset[int]] = set()
    seen: set[tuple[int, int]] = set()
    stack = [(start, 0)]
    while stack:
        state = stack.pop()
        if state in seen:
            continue
        seen.add(state)
        b, forcers = state
        if b == full:
            results.add(frozenset(_bits(full & ~forcers)))
            continue
        all_np_blue = (b & nonprobe_mask) == nonprobe_mask
        for v in _bits(b):
            if not ((probe_mask >> v) & 1 or all_np_blue):
                continue
            white = adj[v] & ~b
            if white and not white & (white - 1):
                stack.append((b | white, forcers | (1 << v)))
    return results


@dataclass
class MinForcingReport:
    """Outcome of :func:`check_min_forcing_structure`."""

    graph6: str
    nonprobes: list[int]
    z: int
    vertex_cut: bool
    minimum_sets_checked: int
    counterexamples: list[dict] = field(default_factory=list)
    nonminimum_reading_holds: bool | None = None

    @property
    def holds(self) -> bool:
        return self.vertex_cut or not self.counterexamples

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "nonprobes": self.nonprobes,
            "z": self.z,
            "vertex_cut": self.vertex_cut,
            "minimum_sets_checked": self.minimum_sets_checked,
            "holds": self.holds,
            "counterexamples": self.counterexamples,
            "nonminimum_reading_holds": self.nonminimum_reading_holds,
        }


def is_vertex_cut(g: Graph, s: Iterable[int]) -> bool:
    """True iff deleting ``s`` leaves at least two components."""
    from .graph import induced_subgraph

    rest = [v for v in g.vertices if v not in set(s)]
    if not rest:
        return False
    sub, _ = induced_subgraph(g, rest)
    return len(sub.components()) >= 2


def check_min_forcing_structure(pg: ProbeGraph, limit: int = STRUCTURE_LIMIT) -> MinForcingReport:
    """Verify the vertex-cut / unique-reversal disjunction for a probe graph with Z = |N|.

    Under the minimum-set reading a counterexample is a minimum set ``B`` with
    ``N ⊄ B`` having some reversal different from ``N``.  The reading over
    all forcing sets not containing ``N`` is evaluated too and stored in
    ``nonminimum_reading_holds`` (only when N is not a vertex cut).
    """
    from .graph import emit_graph6

    if pg.n > limit:
        raise SearchLimitError(f"structure check limited to n <= {limit}")
    z, sets = minimum_probe_forcing_sets(pg)
    if z != len(pg.nonprobes):
        raise PreconditionError(f"probe forcing number {z} differs from |N| = {len(pg.nonprobes)}")
    cut = is_vertex_cut(pg.graph, pg.nonprobes)
    report = MinForcingReport(emit_graph6(pg.graph), sorted(pg.nonprobes), z, cut, len(sets))
    nonprobes = frozenset(pg.nonprobes)
    for b in sets:
        if nonprobes <= b:
            continue
        for rev in sorted(all_reversals(pg, b), key=sorted):
            if rev != nonprobes:
                report.counterexamples.append({"initial": sorted(b), "reversal": sorted(rev)})
    if not cut:
        report.nonminimum_reading_holds = _nonminimum_reading(pg, nonprobes)
    return report


def _nonminimum_reading(pg: ProbeGraph, nonprobes: frozenset[int]) -> bool:
    for size in range(len(nonprobes), pg.n + 1):
        for c in itertools.combinations(range(pg.n), size):
            b = frozenset(c)
            if nonprobes <= b or not is_probe_forcing_set(pg, b):
                continue
            if any(rev != nonprobes for rev in all_reversals(pg, b)):
                return False
    return True


def reversal_failures(pg: ProbeGraph) -> Iterator[tuple[frozenset[int], frozenset[int]]]:
    """(minimum set, reversal) pairs where the reversal does not force."""
    _, sets = minimum_probe_forcing_sets(pg)
    for b in sets:
        for rev in all_reversals(pg, b):
            if not is_probe_forcing_set(pg, rev):
                yield b, rev
