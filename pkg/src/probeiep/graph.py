"""Labeled simple graphs, probe graphs and the structural queries built on them."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from . import _kernels
from .errors import Graph6Error, SearchLimitError

Edge = tuple[int, int]

ENUMERATION_LIMIT = 8
TOPOLOGICAL_MINOR_LIMIT = 12


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = set()
        for e in self.edges:
            u, v = e
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            normalized.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> Graph:
        return cls(n, frozenset(tuple(e) for e in edges))

    # -- basic queries -----------------------------------------------------

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def adj_array(self) -> np.ndarray:
        return _kernels.as_adj_array(self.adj)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        mask = self.adj[v]
        return [u for u in range(self.n) if (mask >> u) & 1]

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def add_edges(self, extra: Iterable[Iterable[int]]) -> Graph:
        return Graph(self.n, self.edges | {_norm_edge(*e) for e in extra})

    def remove_edges(self, gone: Iterable[Iterable[int]]) -> Graph:
        return Graph(self.n, self.edges - {_norm_edge(*e) for e in gone})

    def relabel(self, mapping: dict[int, int] | list[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``mapping[v]``."""
        return Graph(self.n, frozenset(_norm_edge(mapping[u], mapping[v]) for u, v in self.edges))

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            comp_mask = 1 << s
            frontier = comp_mask
            while frontier:
                grow = 0
                for v in _bits(frontier):
                    grow |= self.adj[v]
                frontier = grow & ~comp_mask
                comp_mask |= frontier
            seen |= comp_mask
            comps.append(list(_bits(comp_mask)))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def is_path(self) -> bool:
        """True iff the graph is P_n (P_1 included)."""
        if self.n == 0 or not self.is_connected() or self.m != self.n - 1:
            return False
        return all(self.degree(v) <= 2 for v in self.vertices)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def _bits(mask: int) -> Iterator[int]:
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class ProbeGraph:
    """A graph together with an independent set of non-probe vertices."""

    graph: Graph
    nonprobes: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        nonprobes = frozenset(int(v) for v in self.nonprobes)
        for v in nonprobes:
            if not 0 <= v < self.graph.n:
                raise ValueError(f"non-probe {v} is not a vertex")
        if not is_independent_set(self.graph, nonprobes):
            raise ValueError("non-probe set must be independent")
        object.__setattr__(self, "nonprobes", nonprobes)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def probes(self) -> list[int]:
        return [v for v in self.graph.vertices if v not in self.nonprobes]

    @property
    def nonprobe_mask(self) -> int:
        return mask_of(self.nonprobes)

    @property
    def probe_mask(self) -> int:
        return ((1 << self.n) - 1) & ~self.nonprobe_mask

    def cliqued(self) -> Graph:
        """The completion with every non-probe pair joined."""
        return self.graph.add_edges(itertools.combinations(sorted(self.nonprobes), 2))

    def addable_pairs(self) -> list[Edge]:
        return list(itertools.combinations(sorted(self.nonprobes), 2))


# ---------------------------------------------------------------------------
# graph6


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    for i, b in enumerate(data[:8]):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside the graph6 alphabet", i)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte vertex count", len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte vertex count", len(data))
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` prefix is accepted)."""
    line = text.strip()
    offset = 0
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
        offset = len(">>graph6<<")
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII character", offset + exc.start) from None
    try:
        n, pos = _decode_n(data)
    except Graph6Error as exc:
        raise Graph6Error(exc.reason, offset + exc.offset) from None
    if n > 62:
        raise Graph6Error(f"n={n} exceeds the supported maximum of 62", offset)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) < nbytes:
        raise Graph6Error(f"truncated bit payload: expected {nbytes} bytes, got {len(payload)}",
                          offset + len(data))
    if len(payload) > nbytes:
        raise Graph6Error("trailing bytes after bit payload", offset + pos + nbytes)
    bits = []
    for k, b in enumerate(payload):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside the graph6 alphabet", offset + pos + k)
        val = b - 63
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("non-zero padding bits", offset + pos + nbytes - 1)
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.add((i, j))
            k += 1
    return Graph(n, frozenset(edges))


def emit_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = bytearray(_encode_n(g.n))
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return out.decode("ascii")


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


# ---------------------------------------------------------------------------
# simple constructions


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, frozenset(_norm_edge(i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def wheel_graph(spokes: int) -> Graph:
    """Hub 0 joined to a cycle on ``1..spokes``."""
    rim = [_norm_edge(1 + i, 1 + (i + 1) % spokes) for i in range(spokes)]
    return Graph(spokes + 1, frozenset(rim + [(0, i) for i in range(1, spokes + 1)]))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = set()
    base = 0
    for g in graphs:
        edges |= {(u + base, v + base) for u, v in g.edges}
        base += g.n
    return Graph(base, frozenset(edges))


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(e for e in itertools.combinations(range(g.n), 2) if e not in g.edges))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``s``; returns it with ``label_map[new] = old``."""
    label_map = sorted(set(s))
    for v in label_map:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} is not in the graph")
    new = {old: i for i, old in enumerate(label_map)}
    edges = frozenset((new[u], new[v]) for u, v in g.edges if u in new and v in new)
    return Graph(len(label_map), edges), label_map


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    mask = mask_of(s)
    return all(not (g.adj[v] & mask) for v in _bits(mask))


def independent_sets(g: Graph, min_size: int = 0, maximal: bool = False) -> Iterator[frozenset[int]]:
    """Independent sets in increasing mask order, optionally only the maximal ones."""
    for mask in range(1 << g.n):
        if bin(mask).count("1") < min_size:
            continue
        if any(g.adj[v] & mask for v in _bits(mask)):
            continue
        if maximal and any(not (mask >> u) & 1 and not (g.adj[u] & mask) for u in range(g.n)):
            continue
        yield frozenset(_bits(mask))


def completions(pg: ProbeGraph) -> Iterator[Graph]:
    """Every graph obtained by adding a subset of non-probe pairs.

    Subsets are produced in binary counting order over the sorted pairs, so
    the first element is ``pg.graph`` itself.
    """
    pairs = pg.addable_pairs()
    for code in range(1 << len(pairs)):
        yield pg.graph.add_edges(p for k, p in enumerate(pairs) if (code >> k) & 1)


# ---------------------------------------------------------------------------
# cycles, blocks, outerplanarity


def bridges(g: Graph) -> set[Edge]:
    """Bridges via DFS low-points."""
    disc = [-1] * g.n
    low = [0] * g.n
    found: set[Edge] = set()
    counter = 0
    for root in g.vertices:
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent:
                    continue
                if disc[u] < 0:
                    disc[u] = low[u] = counter
                    counter += 1
                    stack.append((u, v, iter(g.neighbors(u))))
                    advanced = True
                    break
                low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    found.add(_norm_edge(parent, v))
    return found


def core_vertices(g: Graph) -> frozenset[int]:
    """Vertices lying on at least one cycle."""
    cut = bridges(g)
    return frozenset(v for e in g.edges - cut for v in e)


def blocks(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the biconnected components that contain a cycle."""
    cyc = g.remove_edges(bridges(g))
    result = []
    for comp in cyc.components():
        if len(comp) < 3:
            continue
        sub, labels = induced_subgraph(cyc, comp)
        result.extend(frozenset(labels[v] for v in b) for b in _split_at_cut_vertices(sub))
    return result


def _split_at_cut_vertices(g: Graph) -> list[frozenset[int]]:
    """Blocks of a bridgeless connected graph (each has >= 3 vertices)."""
    disc = [-1] * g.n
    low = [0] * g.n
    edge_stack: list[Edge] = []
    out: list[frozenset[int]] = []
    counter = 0
    disc[0] = low[0] = counter
    counter += 1
    stack = [(0, -1, iter(g.neighbors(0)))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for u in it:
            if u == parent:
                continue
            if disc[u] < 0:
                edge_stack.append((v, u))
                disc[u] = low[u] = counter
                counter += 1
                stack.append((u, v, iter(g.neighbors(u))))
                advanced = True
                break
            if disc[u] < disc[v]:
                edge_stack.append((v, u))
                low[v] = min(low[v], disc[u])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                comp = set()
                while edge_stack:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, v):
                        break
                out.append(frozenset(comp))
    return out


def normalize_cycle(order: Iterable[int]) -> tuple[int, ...]:
    """Rotate to start at the lowest label and pick the smaller direction."""
    order = list(order)
    if not order:
        return ()
    k = order.index(min(order))
    rot = order[k:] + order[:k]
    rev = [rot[0]] + rot[:0:-1]
    return tuple(min(rot, rev))


def hamiltonian_cycles(g: Graph, vertices: Iterable[int] | None = None, limit: int = 0) -> list[tuple[int, ...]]:
    """Hamiltonian cycles of ``g[vertices]`` (normalized, deduplicated)."""
    vs = sorted(g.vertices if vertices is None else vertices)
    if len(vs) < 3:
        return []
    allowed = mask_of(vs)
    start = vs[0]
    full = allowed
    found: list[tuple[int, ...]] = []
    seen = set()

    def extend(path: list[int], used: int) -> bool:
        v = path[-1]
        if used == full:
            if g.has_edge(v, start):
                cyc = normalize_cycle(path)
                if cyc not in seen:
                    seen.add(cyc)
                    found.append(cyc)
                    if limit and len(found) >= limit:
                        return True
            return False
        for u in _bits(g.adj[v] & allowed & ~used):
            path.append(u)
            if extend(path, used | (1 << u)):
                return True
            path.pop()
        return False

    extend([start], 1 << start)
    return found


def chords_cross(order: tuple[int, ...], e: Edge, f: Edge) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    a, b = sorted((pos[e[0]], pos[e[1]]))
    c, d = sorted((pos[f[0]], pos[f[1]]))
    return (a < c < b < d) or (c < a < d < b)


@dataclass(frozen=True)
class OuterplanarResult:
    """Outcome of :func:`is_outerplanar`; truthy iff the graph is outerplanar.

    ``outer_cycle`` is the Hamiltonian outer cycle of ``g[core]`` when that
    subgraph is 2-connected, normalized by :func:`normalize_cycle`.
    """

    outerplanar: bool
    outer_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.outerplanar


def is_outerplanar(g: Graph) -> OuterplanarResult:
    """Block-wise test: each cyclic block needs a Hamiltonian cycle with non-crossing chords.

    This deliberately does not share code with
    :func:`has_k4_or_k23_topological_minor`; the two are cross-checked in tests.
    """
    blks = blocks(g)
    outer: tuple[int, ...] | None = None
    for blk in blks:
        sub_edges = [e for e in g.edges if e[0] in blk and e[1] in blk]
        good = None
        for cyc in hamiltonian_cycles(g, blk):
            cyc_edges = {_norm_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
            chords = [e for e in sub_edges if e not in cyc_edges]
            if not any(chords_cross(cyc, e, f) for e, f in itertools.combinations(chords, 2)):
                good = cyc
                break
        if good is None:
            return OuterplanarResult(False)
        if len(blks) == 1:
            outer = good
    return OuterplanarResult(True, outer)


def _vertex_disjoint_paths(g: Graph, s: int, t: int, forbidden_edge: Edge | None, need: int) -> bool:
    """Menger check: are there ``need`` internally disjoint s-t paths?"""
    # vertex-split max flow: v_in = 2v, v_out = 2v + 1
    size = 2 * g.n
    cap: dict[int, dict[int, int]] = {i: {} for i in range(size)}

    def add(a: int, b: int, c: int) -> None:
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    for v in g.vertices:
        add(2 * v, 2 * v + 1, need if v in (s, t) else 1)
    for u, v in g.edges:
        if forbidden_edge is not None and _norm_edge(u, v) == forbidden_edge:
            continue
        add(2 * u + 1, 2 * v, 1)
        add(2 * v + 1, 2 * u, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < need:
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            nxt = []
            for a in queue:
                for b, c in cap[a].items():
                    if c > 0 and b not in parent:
                        parent[b] = a
                        nxt.append(b)
            queue = nxt
        if sink not in parent:
            return False
        b = sink
        while b != source:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
    return True


def _has_k23_subdivision(g: Graph) -> bool:
    # two branch vertices joined by three internally disjoint paths of length >= 2
    for s, t in itertools.combinations(range(g.n), 2):
        if g.degree(s) < 3 or g.degree(t) < 3:
            continue
        if _vertex_disjoint_paths(g, s, t, _norm_edge(s, t), 3):
            return True
    return False


def _has_k4_subdivision(g: Graph) -> bool:
    for blk in blocks(g):
        sub, _ = induced_subgraph(g, blk)
        cand = [v for v in sub.vertices if sub.degree(v) >= 3]
        for branch in itertools.combinations(cand, 4):
            if _route_k4(sub, branch):
                return True
    return False


def _route_k4(g: Graph, branch: tuple[int, ...]) -> bool:
    pairs = list(itertools.combinations(branch, 2))
    branch_mask = mask_of(branch)

    def route(k: int, used: int) -> bool:
        if k == len(pairs):
            return True
        s, t = pairs[k]
        # simple s-t paths whose interior avoids ``used`` and other branch vertices
        blocked = used | (branch_mask & ~((1 << s) | (1 << t)))
        stack = [(s, 1 << s)]
        while stack:
            v, seen = stack.pop()
            for u in _bits(g.adj[v]):
                if u == t:
                    if route(k + 1, used | (seen & ~((1 << s) | (1 << t)))):
                        return True
                    continue
                if (seen >> u) & 1 or (blocked >> u) & 1:
                    continue
                stack.append((u, seen | (1 << u)))
        return False

    return route(0, 0)


def has_k4_or_k23_topological_minor(g: Graph) -> bool:
    """Exhaustive search for a subdivided K4 or K_{2,3} subgraph."""
    if g.n > TOPOLOGICAL_MINOR_LIMIT:
        raise SearchLimitError(f"topological minor search limited to n <= {TOPOLOGICAL_MINOR_LIMIT}")
    if g.m <= g.n:  # at most unicyclic per component: neither subdivision fits
        return False
    return _has_k23_subdivision(g) or _has_k4_subdivision(g)


# ---------------------------------------------------------------------------
# isomorphism classes


def _refined_cells(adj: tuple[int, ...]) -> list[list[int]]:
    """Colour refinement on bitmask adjacency; cells in an isomorphism-invariant order."""
    n = len(adj)
    colors = [bin(a).count("1") for a in adj]
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in _bits(adj[v])))) for v in range(n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ranking[s] for s in sigs]
        if len(ranking) == ncolors:
            break
        ncolors = len(ranking)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


@lru_cache(maxsize=4096)
def _cell_permutations(shape: tuple[tuple[int, ...], ...]) -> np.ndarray:
    per_cell = [list(itertools.permutations(c)) for c in shape]
    rows = [sum(choice, ()) for choice in itertools.product(*per_cell)]
    if not rows or not rows[0]:
        return np.zeros((1, 0), dtype=np.int64)
    return np.asarray(rows, dtype=np.int64)


def canonical_form(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key ``(n, code)``.

    ``code`` is the minimum upper-triangle adjacency code over all relabelings
    that respect the colour-refinement cells (cells ordered by their invariant
    colour).  Any isomorphism maps cells to equal-colour cells, so the minimum
    is a complete invariant.
    """
    return g.n, _canonical_code(g.adj)


def _canonical_code(adj: tuple[int, ...]) -> int:
    n = len(adj)
    if n > ENUMERATION_LIMIT + 2:
        raise SearchLimitError("canonical form limited to small graphs")
    if n < 2:
        return 0
    mat = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        for u in _bits(adj[v]):
            mat[v, u] = 1
    perms = _cell_permutations(tuple(tuple(c) for c in _refined_cells(adj)))
    return int(_kernels.canonical_code(mat, perms))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_form(g) == canonical_form(h)


def graph_from_code(n: int, code: int) -> Graph:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    k = len(pairs)
    return Graph(n, frozenset(p for idx, p in enumerate(pairs) if (code >> (k - 1 - idx)) & 1))


@lru_cache(maxsize=None)
def _all_graph_codes(n: int) -> tuple[int, ...]:
    if n <= 1:
        return (0,)
    seen: set[int] = set()
    top = 1 << (n - 1)
    for code in _all_graph_codes(n - 1):
        base = list(graph_from_code(n - 1, code).adj) + [0]
        for nbrs in range(top):
            adj = base.copy()
            for u in _bits(nbrs):
                adj[u] |= top
            adj[n - 1] = nbrs
            seen.add(_canonical_code(tuple(adj)))
    return tuple(sorted(seen))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class on ``n`` vertices (n <= 8).

    Representatives are the canonical relabelings, yielded in increasing
    canonical code order.
    """
    if n > ENUMERATION_LIMIT:
        raise SearchLimitError(f"graph enumeration limited to n <= {ENUMERATION_LIMIT}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        if not connected_only:
            yield Graph(0)
        return
    for code in _all_graph_codes(n):
        g = graph_from_code(n, code)
        if connected_only and not g.is_connected():
            continue
        yield g


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Trees on ``n`` vertices up to isomorphism, grown leaf by leaf."""
    if n < 1:
        return
    level = {_tree_key(Graph(1)): Graph(1)}
    for size in range(2, n + 1):
        nxt: dict[str, Graph] = {}
        for t in level.values():
            for v in t.vertices:
                grown = Graph(size, t.edges | {(v, size - 1)})
                nxt.setdefault(_tree_key(grown), grown)
        level = nxt
    yield from (level[k] for k in sorted(level))


def _tree_key(t: Graph) -> str:
    """AHU canonical string of the tree rooted at its centre(s)."""
    centers = _tree_centers(t)

    def encode(v: int, parent: int) -> str:
        return "(" + "".join(sorted(encode(u, v) for u in t.neighbors(v) if u != parent)) + ")"

    if len(centers) == 1:
        return encode(centers[0], -1)
    a, b = centers
    return "".join(sorted((encode(a, b), encode(b, a))))


def _tree_centers(t: Graph) -> list[int]:
    deg = [t.degree(v) for v in t.vertices]
    remaining = set(t.vertices)
    leaves = [v for v in remaining if deg[v] <= 1]
    while len(remaining) > 2:
        nxt = []
        for v in leaves:
            remaining.discard(v)
            for u in t.neighbors(v):
                if u in remaining:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        leaves = nxt
    return sorted(remaining)


# ---------------------------------------------------------------------------
# alpha graphs


def make_alpha_graph(r: int, p1: int, p2: int, p3: int, p4: int, interior: Iterable[int] = ()) -> Graph:
    """Outer cycle ``c_0..c_{r-1}`` (labels ``0..r-1``) with interior edges ``c_0 c_i``.

    Pendant paths with ``p1``, ``p2`` vertices hang from ``c_0``, ``p3`` from
    ``c_{r-1}`` and ``p4`` from ``c_1``; pendant vertices are numbered from
    ``r`` upwards in that order, each path starting at its attachment leaf.
    """
    interior = sorted(set(interior))
    if r < 3:
        raise ValueError("alpha graphs need r >= 3")
    if p1 < 1 or p2 < 1 or p3 < 0 or p4 < 0:
        raise ValueError("need p1, p2 >= 1 and p3, p4 >= 0")
    for i in interior:
        if not 0 <= i < r or i in (r - 1, 0, 1):
            raise ValueError(f"interior edge c0c{i} not allowed (need 2 <= i <= r-2)")
    edges = {_norm_edge(i, (i + 1) % r) for i in range(r)}
    edges |= {(0, i) for i in interior}
    nxt = r
    for length, anchor in ((p1, 0), (p2, 0), (p3, r - 1), (p4, 1)):
        prev = anchor
        for _ in range(length):
            edges.add(_norm_edge(prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, frozenset(edges))
