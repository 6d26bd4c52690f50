"""Witness matrices for probe graphs and the combined rank interval for mr(G^N)."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .forcing import probe_zero_forcing_number
from .graph import ProbeGraph, emit_graph6
from .linalg import (
    Entry,
    RationalMatrix,
    determinant,
    in_S_probe,
    matches_pattern,
    nullity,
    probe_order,
    probe_pattern,
    projection_split,
    rank,
    solve,
    solve_left,
    symmetric_same_rowspace,
)


@dataclass(frozen=True)
class RankInterval:
    lower: int
    upper: int
    lower_source: str = ""
    upper_source: str = ""

    def __post_init__(self) -> None:
        if not 0 <= self.lower <= self.upper:
            raise ValueError(f"invalid rank interval [{self.lower}, {self.upper}]")

    def contains(self, value: int) -> bool:
        return self.lower <= value <= self.upper

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_json(self) -> dict:
        return {"lower": self.lower, "upper": self.upper,
                "lower_source": self.lower_source, "upper_source": self.upper_source}


@dataclass(frozen=True)
class Realization:
    """Probe rows ``[A | B]`` with columns in :func:`probe_order`."""

    topblock: RationalMatrix
    certified: bool = False

    @property
    def p(self) -> int:
        return self.topblock.rows

    @property
    def A(self) -> RationalMatrix:
        return self.topblock.submatrix(range(self.p), range(self.p))

    @property
    def B(self) -> RationalMatrix:
        return self.topblock.submatrix(range(self.p), range(self.p, self.topblock.cols))

    def validate(self, pg: ProbeGraph) -> None:
        if not matches_pattern(self.topblock, probe_pattern(pg)):
            raise PreconditionError("realization does not match the probe pattern")
        if not self.A.is_symmetric():
            raise PreconditionError("probe block of the realization is not symmetric")

    @classmethod
    def from_blocks(cls, a: RationalMatrix, b: RationalMatrix, certified: bool = False) -> Realization:
        return cls(RationalMatrix.block([[a, b]]), certified)


def _to_original_labels(m: RationalMatrix, order: list[int]) -> RationalMatrix:
    inv = [0] * len(order)
    for pos, v in enumerate(order):
        inv[v] = pos
    return m.permuted(inv)


def full_rank_probe_block(pg: ProbeGraph) -> tuple[RationalMatrix, int]:
    """``A0 + tI`` with A0 the 0/1 adjacency of G[P] and t the least positive integer giving det != 0."""
    probes = sorted(pg.probes)
    a0 = RationalMatrix([[1 if pg.graph.has_edge(u, v) else 0 for v in probes] for u in probes])
    t = 1
    while True:
        a = a0 + RationalMatrix.identity(len(probes)).scale(t)
        if determinant(a) != 0:
            return a, t
        t += 1


def nullity_witness(pg: ProbeGraph) -> RationalMatrix:
    """Matrix in the probe class with nullity exactly |N| (original labels)."""
    order = probe_order(pg)
    p = len(pg.probes)
    a, _ = full_rank_probe_block(pg)
    b = RationalMatrix([[1 if pg.graph.has_edge(u, v) else 0 for v in order[p:]] for u in order[:p]], p, pg.n - p)
    d = solve(a, b)
    ad = a @ d
    m = RationalMatrix.block([[a, ad], [ad.T, d.T @ ad]]) if p and pg.n - p else (
        a if p else RationalMatrix.zeros(pg.n, pg.n))
    return _to_original_labels(m, order)


@dataclass(frozen=True)
class QConstruction:
    Q: RationalMatrix
    B_para: RationalMatrix
    B_perp: RationalMatrix
    C: RationalMatrix
    D: RationalMatrix
    W: RationalMatrix  # RᵀR

    @property
    def bound(self) -> int:
        return rank(self.Q.submatrix(range(self.C.rows), range(self.C.rows))) + 2 * rank(self.B_perp)


def construct_Q(pg: ProbeGraph, real: Realization) -> QConstruction:
    """Symmetric completion of ``[A | B]`` with rank at most rank(A) + 2 rank(B_perp).

    ``Q = [[A, AC + DW], [CᵀA + WDᵀ, W + CᵀAC + CᵀDW + WDᵀC]]`` where
    ``B = AC + B_perp``, ``W = RᵀR`` shares the row space of ``B_perp`` and
    ``DW = B_perp``.  Q is indexed in :func:`probe_order`.
    """
    real.validate(pg)
    a, b = real.A, real.B
    b_para, b_perp = projection_split(a, b)
    c = solve(a, b_para)
    w = symmetric_same_rowspace(b_perp)
    d = solve_left(w, b_perp)
    ct = c.T
    top_right = a @ c + d @ w
    bottom_right = w + ct @ a @ c + ct @ d @ w + w @ d.T @ c
    q = RationalMatrix.block([[a, top_right], [top_right.T, bottom_right]]) if b.cols else a
    return QConstruction(q, b_para, b_perp, c, d, w)


def congruent_diagonal(qc: QConstruction, a: RationalMatrix) -> RationalMatrix:
    """``diag(A - DWDᵀ, W)``, congruent to Q."""
    top = a - qc.D @ qc.W @ qc.D.T
    k = qc.W.rows
    return RationalMatrix.block([[top, RationalMatrix.zeros(top.rows, k)],
                                 [RationalMatrix.zeros(k, top.cols), qc.W]])


def sandwich_bounds(pg: ProbeGraph, real: Realization) -> RankInterval:
    real.validate(pg)
    a, b = real.A, real.B
    _, b_perp = projection_split(a, b)
    ra, rp = rank(a), rank(b_perp)
    tag = "pattern realization" + (" (certified minimum)" if real.certified else " (not certified minimum)")
    return RankInterval(ra + rp, ra + 2 * rp, tag, "Q construction")


# ---------------------------------------------------------------------------
# best-effort pattern minimiser


@dataclass
class PatternSearchResult:
    realization: Realization
    rank: int
    certified: bool
    attempts: int = 0


def minimize_pattern_rank(pg: ProbeGraph, seconds: float = 1.0, seed: int = 0,
                          values: tuple[int, ...] = (1, -1, 2, -2, 3)) -> PatternSearchResult:
    """Random search for a low-rank realization of the probe pattern.

    Free diagonal entries range over ``{0} ∪ values`` and forced-nonzero
    entries over ``values``; the probe block is kept symmetric.  The result
    is certified only when its rank meets a trivial lower bound (0 without
    stars, 1 with a star).
    """
    pat = probe_pattern(pg)
    p, n = pat.rows, pat.cols
    rng = random.Random(seed)
    has_star = any(e is Entry.STAR for row in pat.entries for e in row)
    floor = 1 if has_star else 0
    best: Realization | None = None
    best_rank = n + 1
    attempts = 0
    deadline = time.monotonic() + seconds
    candidates = [_uniform_realization(pat, 1)]
    while True:
        if candidates:
            grid = candidates.pop()
        else:
            if time.monotonic() > deadline:
                break
            grid = _random_realization(pat, rng, values)
        attempts += 1
        m = RationalMatrix(grid, p, n)
        r = rank(m)
        if r < best_rank:
            best, best_rank = Realization(m), r
            if r <= floor:
                break
    certified = best_rank <= floor
    assert best is not None
    return PatternSearchResult(Realization(best.topblock, certified), best_rank, certified, attempts)


def random_realization(pg: ProbeGraph, seed: int = 0, values: tuple[int, ...] = (1, -1, 2, -2, 3)) -> Realization:
    """One random realization of the probe pattern with a symmetric probe block."""
    pat = probe_pattern(pg)
    grid = _random_realization(pat, random.Random(seed), values)
    return Realization(RationalMatrix(grid, pat.rows, pat.cols))


def _uniform_realization(pat, value: int) -> list[list[int]]:
    return [[value if e is Entry.STAR else (0 if e is Entry.ZERO else value) for e in row] for row in pat.entries]


def _random_realization(pat, rng: random.Random, values: tuple[int, ...]) -> list[list[int]]:
    p = pat.rows
    grid = [[0] * pat.cols for _ in range(p)]
    for i in range(p):
        for j in range(pat.cols):
            if j < p and j < i:
                grid[i][j] = grid[j][i]
                continue
            e = pat.entries[i][j]
            if e is Entry.STAR:
                grid[i][j] = rng.choice(values)
            elif e is Entry.ANY:
                grid[i][j] = rng.choice((0,) + values)
    return grid


# ---------------------------------------------------------------------------
# combined interval


def mr_interval(pg: ProbeGraph, realization: Realization | None = None,
                use_characterizations: bool = True) -> RankInterval:
    """Bounds on mr(G^N) from forcing, the nullity witness, an optional realization
    and (optionally) the extreme-rank characterizations."""
    n = pg.n
    k = len(pg.nonprobes)
    z, _ = probe_zero_forcing_number(pg)
    lower, lower_src = n - z, "n - Z(G^N)"
    witness = nullity_witness(pg)
    if not in_S_probe(witness, pg) or nullity(witness) != k:
        raise AssertionError("nullity witness construction failed")
    upper, upper_src = n - k, "nullity witness"
    if realization is not None:
        sb = sandwich_bounds(pg, realization)
        if realization.certified and sb.lower > lower:
            lower, lower_src = sb.lower, sb.lower_source
        q = construct_Q(pg, realization).Q
        rq = rank(q)
        if rq < upper:
            upper, upper_src = rq, "Q construction"
    if use_characterizations:
        from . import mr_classify as mc

        for value, exact, tag in mc.characterization_facts(pg):
            if exact:
                if value > lower:
                    lower, lower_src = value, tag
                if value < upper:
                    upper, upper_src = value, tag
            elif value == "le2" and upper > 2:
                upper, upper_src = 2, tag
            elif value == "gt2" and lower < 3:
                lower, lower_src = 3, tag
            elif value == "gt1" and lower < 2:
                lower, lower_src = 2, tag
            elif value == "gt0" and lower < 1:
                lower, lower_src = 1, tag
            elif value == "ne_n-1" and upper >= n - 1 and n >= 1:
                upper, upper_src = n - 2, tag
            elif value == "ne_n-2" and upper == n - 2:
                upper, upper_src = n - 3, tag
    if lower > upper:
        raise AssertionError(f"inconsistent bounds [{lower}, {upper}] for {emit_graph6(pg.graph)} N={sorted(pg.nonprobes)}")
    return RankInterval(lower, upper, lower_src, upper_src)


def witness_envelope(pg: ProbeGraph, m: RationalMatrix) -> dict:
    r = rank(m)
    return {
        "graph6": emit_graph6(pg.graph),
        "nonprobes": sorted(pg.nonprobes),
        "claimed_rank": r,
        "claimed_nullity": m.cols - r,
        "in_class": in_S_probe(m, pg),
        "matrix": m.to_text(),
    }


def fraction_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"
