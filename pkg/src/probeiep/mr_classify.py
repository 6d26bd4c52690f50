"""Extreme minimum-rank classes of probe graphs: mr = 0, 1, <= 2, n-1 and n-2."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from importlib import resources

from .errors import PreconditionError, SearchLimitError
from .graph import (
    Graph,
    ProbeGraph,
    canonical_form,
    complement,
    completions,
    emit_graph6,
    induced_subgraph,
    parse_graph6,
)
from .parallel_paths import gplus_decide, recognize

COMPLETION_LIMIT = 6


class Verdict(str, Enum):
    ZERO = "Zero"
    ONE = "One"
    AT_MOST_TWO = "AtMostTwo"
    EXACTLY_N_MINUS_2 = "ExactlyNMinus2"
    EXACTLY_N_MINUS_1 = "ExactlyNMinus1"
    UNRESOLVED = "Unresolved"


def is_mr0(pg: ProbeGraph) -> bool:
    return pg.graph.m == 0


# ---------------------------------------------------------------------------
# mr = 1


@dataclass(frozen=True)
class SplitDecomposition:
    """``(K_a ∨ K̄_b) ∪ K̄_c`` with the three vertex sets."""

    clique: frozenset[int]
    independent: frozenset[int]
    isolated: frozenset[int]

    @property
    def abc(self) -> tuple[int, int, int]:
        return len(self.clique), len(self.independent), len(self.isolated)

    def to_json(self) -> dict:
        a, b, c = self.abc
        return {"a": a, "b": b, "c": c, "clique": sorted(self.clique),
                "independent": sorted(self.independent), "isolated": sorted(self.isolated)}


def split_decomposition(g: Graph) -> SplitDecomposition | None:
    """Decompose into a complete split graph plus isolated vertices, if possible.

    The clique side takes every vertex adjacent to all other non-isolated
    vertices, which keeps the independent side as small as possible.
    """
    isolated = frozenset(v for v in g.vertices if g.degree(v) == 0)
    rest = [v for v in g.vertices if v not in isolated]
    if not rest:
        return None
    rest_mask = sum(1 << v for v in rest)
    clique = frozenset(v for v in rest if g.adj[v] | (1 << v) == rest_mask)
    indep = frozenset(rest) - clique
    if not clique:
        return None
    if any(g.adj[v] & sum(1 << u for u in indep) for v in indep):
        return None
    return SplitDecomposition(clique, indep, isolated)


def is_mr1(pg: ProbeGraph) -> tuple[bool, SplitDecomposition | None]:
    """mr(G^N) = 1 iff G is a complete split graph plus isolated vertices whose
    independent side, when it has two or more vertices, lies inside N."""
    dec = split_decomposition(pg.graph)
    if dec is None:
        return False, None
    if len(dec.independent) >= 2 and not dec.independent <= pg.nonprobes:
        return False, dec
    return True, dec


def rank_one_witness(pg: ProbeGraph, dec: SplitDecomposition):
    """The 0/1 block matrix supported on the join, as a :class:`RationalMatrix`."""
    from .linalg import RationalMatrix

    support = dec.clique | dec.independent
    return RationalMatrix([[1 if (i in support and j in support) else 0 for j in range(pg.n)]
                           for i in range(pg.n)], pg.n, pg.n)


# ---------------------------------------------------------------------------
# mr <= 2


@dataclass(frozen=True)
class ComplementForm:
    """Decomposition of the complement as ``(K_s1 ∪ K_s2 ∪ K_{p,q} ∪ ...) ∨ K_r``."""

    join: frozenset[int]
    cliques: tuple[frozenset[int], ...]
    bipartite: tuple[tuple[frozenset[int], frozenset[int]], ...]

    def to_json(self) -> dict:
        return {"r": sorted(self.join), "cliques": [sorted(c) for c in self.cliques],
                "bipartite": [[sorted(p), sorted(q)] for p, q in self.bipartite]}


def _bipartition(h: Graph, comp: list[int]) -> tuple[frozenset[int], frozenset[int]] | None:
    """Sides of ``comp`` when it induces a complete bipartite graph (K1 and K2 included)."""
    inside = set(comp)
    side = {comp[0]: 0}
    queue = [comp[0]]
    for v in queue:
        for u in h.neighbors(v):
            if u not in inside:
                continue
            if u not in side:
                side[u] = 1 - side[v]
                queue.append(u)
            elif side[u] == side[v]:
                return None
    p = frozenset(v for v in comp if side[v] == 0)
    q = frozenset(comp) - p
    if sum(1 for u, v in itertools.combinations(comp, 2) if h.has_edge(u, v)) != len(p) * len(q):
        return None
    return p, q


def _is_clique(h: Graph, verts) -> bool:
    return all(h.has_edge(u, v) for u, v in itertools.combinations(verts, 2))


def complement_form_recognizer(g: Graph) -> ComplementForm | None:
    """Structural test of the complement form; returns the decomposition or None."""
    h = complement(g)
    full = (1 << h.n) - 1
    universal = [v for v in h.vertices if h.adj[v] | (1 << v) == full]
    for size in range(len(universal), -1, -1):
        for join in itertools.combinations(universal, size):
            form = _decompose_rest(h, frozenset(join))
            if form is not None:
                return form
    return None


def _decompose_rest(h: Graph, join: frozenset[int]) -> ComplementForm | None:
    rest = [v for v in h.vertices if v not in join]
    sub, labels = induced_subgraph(h, rest)
    cliques, bips = [], []
    for comp in sub.components():
        verts = [labels[v] for v in comp]
        bp = _bipartition(h, verts) if len(verts) <= 2 or not _is_clique(h, verts) else None
        if bp is not None:
            bips.append(bp)
        elif _is_clique(h, verts):
            cliques.append(frozenset(verts))
        else:
            return None
    if len(cliques) > 2:
        return None
    return ComplementForm(join, tuple(cliques), tuple(bips))


@lru_cache(maxsize=None)
def _exhaustive_form_by_class(n: int, code: int) -> bool:
    from .graph import graph_from_code

    return _exhaustive_form(graph_from_code(n, code))


def _exhaustive_form(g: Graph) -> bool:
    """Search over every set partition and block typing of V for the complement form.

    Independent of :func:`complement_form_recognizer`: nothing is read off
    the complement's components, every candidate is rebuilt and compared.
    """
    n = g.n
    target = complement(g).edges
    verts = list(range(n))

    def partitions(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for part in partitions(rest):
            for i in range(len(part)):
                yield part[:i] + [[first] + part[i]] + part[i + 1:]
            yield [[first]] + part

    for part in partitions(verts):
        # block types: 0 join, 1 clique, 2+ bipartite with the given split
        options = []
        for block in part:
            opts = [("join", None), ("clique", None)]
            rest = block[1:]
            for k in range(len(rest) + 1):
                for side in itertools.combinations(rest, k):
                    opts.append(("bip", frozenset((block[0],) + side)))
            options.append(opts)
        for choice in itertools.product(*options):
            kinds = [c[0] for c in choice]
            if kinds.count("join") > 1 or kinds.count("clique") > 2:
                continue
            edges = set()
            join = set()
            for block, (kind, side) in zip(part, choice):
                if kind == "join":
                    join.update(block)
                    edges.update(itertools.combinations(sorted(block), 2))
                elif kind == "clique":
                    edges.update(itertools.combinations(sorted(block), 2))
                else:
                    other = [v for v in block if v not in side]
                    edges.update(tuple(sorted((u, v))) for u in side for v in other)
            for u in join:
                for v in verts:
                    if v not in join:
                        edges.add((min(u, v), max(u, v)))
            if edges == target:
                return True
    return False


def complement_form_exhaustive(g: Graph) -> bool:
    """Exhaustive complement-form test (cached per isomorphism class, n <= 10)."""
    n, code = canonical_form(g)
    return _exhaustive_form_by_class(n, code)


def is_mr_le2(pg: ProbeGraph, recognizer=None, limit: int = COMPLETION_LIMIT) -> tuple[bool, frozenset | None]:
    """mr(G^N) <= 2 iff some completion passes the complement-form test.

    Returns the verdict and the added edge set S of the first passing
    completion.  ``recognizer`` defaults to the structural test.
    """
    if len(pg.nonprobes) > limit:
        raise SearchLimitError(f"completion enumeration limited to |N| <= {limit}")
    test = recognizer or (lambda h: complement_form_recognizer(h) is not None)
    base = pg.graph.edges
    for h in completions(pg):
        if test(h):
            return True, frozenset(h.edges - base)
    return False, None


def is_mr_nminus1(pg: ProbeGraph) -> bool:
    return len(pg.nonprobes) <= 1 and pg.graph.is_path()


# ---------------------------------------------------------------------------
# special graphs


@dataclass(frozen=True)
class SpecialGraph:
    index: int
    name: str
    graph: Graph
    labels: dict = field(default_factory=dict, compare=False, hash=False)


@dataclass(frozen=True)
class SpecialCatalog:
    entries: tuple[SpecialGraph, ...]
    max_n: int
    provenance: str

    def __post_init__(self):
        object.__setattr__(self, "_by_key", {canonical_form(e.graph): e for e in self.entries})

    def lookup(self, g: Graph) -> SpecialGraph | None:
        if g.n > self.max_n:
            raise SearchLimitError(f"special-graph catalog covers n <= {self.max_n}")
        return self._by_key.get(canonical_form(g))


@lru_cache(maxsize=1)
def special_catalog() -> SpecialCatalog:
    raw = json.loads(resources.files("probeiep.data").joinpath("special_graphs.json").read_text())
    entries = []
    for i, item in enumerate(raw["graphs"], start=1):
        g = parse_graph6(item["graph6"])
        entries.append(SpecialGraph(i, item["name"], g, item.get("labels", {})))
    return SpecialCatalog(tuple(entries), raw["max_n"], raw["provenance"])


@dataclass(frozen=True)
class SpecialMatch:
    index: int
    name: str
    labeling: tuple[int, ...]  # labeling[v] = catalog label of vertex v

    def to_json(self) -> dict:
        return {"index": self.index, "name": self.name, "labeling": list(self.labeling)}


def find_isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """A bijection ``phi`` with ``uv in E(g) <=> phi(u)phi(v) in E(h)``, by backtracking."""
    if g.n != h.n or g.m != h.m:
        return None
    if sorted(g.degree(v) for v in g.vertices) != sorted(h.degree(v) for v in h.vertices):
        return None
    order = sorted(g.vertices, key=lambda v: -g.degree(v))
    phi: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in h.vertices:
            if w in used or h.degree(w) != g.degree(v):
                continue
            if all(g.has_edge(v, u) == h.has_edge(w, phi[u]) for u in phi):
                phi[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del phi[v]
                used.discard(w)
        return False

    if not extend(0):
        return None
    return tuple(phi[v] for v in range(g.n))


def special_graph_match(g: Graph) -> SpecialMatch | None:
    entry = special_catalog().lookup(g)
    if entry is None:
        return None
    phi = find_isomorphism(g, entry.graph)
    assert phi is not None
    return SpecialMatch(entry.index, entry.name, phi)


# ---------------------------------------------------------------------------
# mr = n - 2


def graph_rank_class(h: Graph) -> str:
    """``"n-1"``, ``"n-2"`` or ``"<n-2"`` for a graph, from the path, two-parallel-paths and
    special-graph characterizations."""
    if h.is_path():
        return "n-1"
    if recognize(h) or special_graph_match(h) is not None:
        return "n-2"
    return "<n-2"


def is_mr_nminus2(pg: ProbeGraph, literal: bool = False) -> tuple[bool, str]:
    """Case analysis for mr(G^N) = n - 2 on a connected probe graph.

    Case 4 is evaluated as "G is special and G + xy is special or a graph of
    two parallel paths".  Unless ``literal`` is set, the G+ deciders use the
    corrected conditions and a further case covers G of two parallel paths
    with G + xy special.
    """
    g = pg.graph
    if not g.is_connected():
        raise PreconditionError("the n-2 characterization needs a connected graph")
    k = len(pg.nonprobes)
    if k > 2:
        return False, "|N| > 2"
    if k <= 1:
        if recognize(g) and not g.is_path():
            return True, "case 1: two parallel paths"
        if special_graph_match(g) is not None:
            return True, "case 1: special graph"
        return False, "none"
    x, y = sorted(pg.nonprobes)
    if recognize(g):
        dec = gplus_decide(pg, literal)
        if dec.result:
            tag = "case 3: tree" if g.is_forest() else "case 2: non-empty core"
            return True, f"{tag} ({dec.case})"
        if not literal and special_graph_match(g.add_edges([(x, y)])) is not None:
            return True, "extra case: G+ special"
        return False, "none"
    if special_graph_match(g) is not None:
        plus = g.add_edges([(x, y)])
        if recognize(plus) or special_graph_match(plus) is not None:
            return True, "case 4: special graph"
    return False, "none"


def nminus2_by_characterizations(pg: ProbeGraph) -> bool:
    """``mr(G) >= n-2`` and ``mr(G+) >= n-2`` with equality for one of them (|N| <= 2)."""
    if len(pg.nonprobes) > 2:
        return False
    g = pg.graph
    plus = g.add_edges(itertools.combinations(sorted(pg.nonprobes), 2))
    classes = {graph_rank_class(g), graph_rank_class(plus)}
    return "<n-2" not in classes and "n-2" in classes


# ---------------------------------------------------------------------------
# classification


@dataclass
class MrClassification:
    verdict: Verdict
    value: int | None
    certificate: dict
    interval: object  # RankInterval
    notes: list[str] = field(default_factory=list)

    def to_json(self, pg: ProbeGraph) -> dict:
        return {
            "graph6": emit_graph6(pg.graph),
            "N": sorted(pg.nonprobes),
            "verdict": self.verdict.value,
            "value": self.value,
            "certificate": self.certificate,
            "interval": self.interval.to_json(),
            "provenance": self.notes,
        }


def _flags(pg: ProbeGraph) -> dict:
    out: dict = {"mr0": is_mr0(pg)}
    ok1, dec = is_mr1(pg)
    out["mr1"] = (ok1, dec)
    try:
        out["le2"] = is_mr_le2(pg)
    except SearchLimitError:
        out["le2"] = None
    out["nminus1"] = is_mr_nminus1(pg)
    out["nminus2"] = None
    if pg.graph.is_connected() and pg.n >= 1:
        try:
            out["nminus2"] = is_mr_nminus2(pg)
        except SearchLimitError:
            pass
    return out


def characterization_facts(pg: ProbeGraph) -> list[tuple]:
    """``(value, exact, tag)`` facts about mr(G^N) for :func:`witness.mr_interval`."""
    f = _flags(pg)
    n = pg.n
    facts: list[tuple] = []
    if f["mr0"]:
        return [(0, True, "mr = 0 (edgeless)")]
    facts.append(("gt0", False, "has an edge"))
    if f["mr1"][0]:
        return facts + [(1, True, "mr = 1 (complete split form)")]
    facts.append(("gt1", False, "not of the mr = 1 form"))
    if f["le2"] is not None:
        if f["le2"][0]:
            facts.append((2, True, "mr <= 2 (complement form) and mr > 1"))
        else:
            facts.append(("gt2", False, "no completion has the complement form"))
    if f["nminus1"]:
        facts.append((n - 1, True, "mr = n - 1 (path, |N| <= 1)"))
    else:
        facts.append(("ne_n-1", False, "not a path with |N| <= 1"))
    if f["nminus2"] is not None:
        if f["nminus2"][0]:
            facts.append((n - 2, True, f"mr = n - 2 ({f['nminus2'][1]})"))
        else:
            facts.append(("ne_n-2", False, "n - 2 characterization fails"))
    return facts


def classify(pg: ProbeGraph) -> MrClassification:
    """First verdict among mr 0, 1, <= 2, n-1, n-2; exact values win over "<= 2" when they coincide."""
    from .witness import mr_interval

    f = _flags(pg)
    n = pg.n
    interval = mr_interval(pg)
    notes = []
    if f["mr0"]:
        return MrClassification(Verdict.ZERO, 0, {}, interval)
    ok1, dec = f["mr1"]
    if ok1:
        return MrClassification(Verdict.ONE, 1, {"decomposition": dec.to_json()}, interval)
    if f["le2"] is None:
        notes.append("mr <= 2 test skipped: too many non-probes")
    nm2 = f["nminus2"]
    if f["le2"] is not None and f["le2"][0]:
        s = sorted(list(e) for e in f["le2"][1])
        if f["nminus1"] and n - 1 <= 2:
            notes.append("mr <= 2 also holds; exact value n - 1 reported")
            return MrClassification(Verdict.EXACTLY_N_MINUS_1, n - 1, {"completion_edges": s}, interval, notes)
        if nm2 is not None and nm2[0] and n - 2 <= 2:
            notes.append("mr <= 2 also holds; exact value n - 2 reported")
            return MrClassification(Verdict.EXACTLY_N_MINUS_2, n - 2,
                                    {"completion_edges": s, "case": nm2[1]}, interval, notes)
        return MrClassification(Verdict.AT_MOST_TWO, 2, {"completion_edges": s}, interval, notes)
    if f["nminus1"]:
        return MrClassification(Verdict.EXACTLY_N_MINUS_1, n - 1, {"path": True}, interval, notes)
    if nm2 is not None and nm2[0]:
        cert: dict = {"case": nm2[1]}
        rec = recognize(pg.graph)
        if rec.certificate is not None:
            cert["two_paths"] = rec.certificate.to_json()
        sm = special_graph_match(pg.graph) if pg.n <= special_catalog().max_n else None
        if sm is not None:
            cert["special"] = sm.to_json()
        return MrClassification(Verdict.EXACTLY_N_MINUS_2, n - 2, cert, interval, notes)
    if nm2 is None:
        notes.append("n - 2 characterization not applied (disconnected or beyond catalog)")
    return MrClassification(Verdict.UNRESOLVED, None, {}, interval, notes)

