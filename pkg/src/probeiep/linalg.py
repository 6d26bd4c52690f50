"""Exact rational matrices, zero-nonzero patterns and the projection constructions."""

from __future__ import annotations

import enum
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import NoSolution
from .graph import Graph, ProbeGraph

Number = int | Fraction


class RationalMatrix:
    """Dense matrix of :class:`fractions.Fraction` entries.

    Instances are treated as immutable values; every operation returns a new
    matrix.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Iterable[Number]], rows: int | None = None, cols: int | None = None):
        data = tuple(tuple(Fraction(x) for x in row) for row in entries)
        r = len(data) if rows is None else rows
        c = (len(data[0]) if data else 0) if cols is None else cols
        if len(data) != r or any(len(row) != c for row in data):
            raise ValueError("entry grid does not match the stated shape")
        self.rows = r
        self.cols = c
        self._data = data

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def ones(cls, rows: int, cols: int) -> RationalMatrix:
        return cls([[1] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def diag(cls, values: Sequence[Number]) -> RationalMatrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def block(cls, grid: Sequence[Sequence[RationalMatrix]]) -> RationalMatrix:
        """Assemble a block matrix; blocks in a row share height, in a column share width."""
        out = []
        for brow in grid:
            height = brow[0].rows
            if any(b.rows != height for b in brow):
                raise ValueError("blocks in a row must have equal height")
            for i in range(height):
                out.append([x for b in brow for x in b._data[i]])
        cols = sum(b.cols for b in grid[0]) if grid else 0
        return cls(out, len(out), cols)

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> RationalMatrix:
        return RationalMatrix([[self._data[i][j] for j in cols] for i in rows], len(rows), len(cols))

    def permuted(self, order: Sequence[int]) -> RationalMatrix:
        """Simultaneous row/column permutation: ``result[i, j] = self[order[i], order[j]]``."""
        return self.submatrix(order, order)

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        self._same_shape(other)
        return RationalMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
                              self.rows, self.cols)

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        self._same_shape(other)
        return RationalMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
                              self.rows, self.cols)

    def __neg__(self) -> RationalMatrix:
        return RationalMatrix([[-a for a in r] for r in self._data], self.rows, self.cols)

    def scale(self, c: Number) -> RationalMatrix:
        c = Fraction(c)
        return RationalMatrix([[c * a for a in r] for r in self._data], self.rows, self.cols)

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols_t = list(zip(*other._data)) if other.rows else [()] * other.cols
        return RationalMatrix(
            [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols_t] for r in self._data],
            self.rows, other.cols)

    @property
    def T(self) -> RationalMatrix:
        return RationalMatrix([[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
                              self.cols, self.rows)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self._data[i][j] == self._data[j][i] for i in range(self.rows) for j in range(i))

    def _same_shape(self, other: RationalMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"RationalMatrix({self.rows}x{self.cols}: {body})"

    # -- serialization ------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        for r in self._data:
            lines.append(" ".join(f"{x.numerator}/{x.denominator}" for x in r))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> RationalMatrix:
        tokens = text.split()
        if len(tokens) < 2:
            raise ValueError("matrix text needs a 'rows cols' header")
        rows, cols = int(tokens[0]), int(tokens[1])
        body = tokens[2:]
        if len(body) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, found {len(body)}")
        vals = [Fraction(t) for t in body]
        return cls([vals[i * cols:(i + 1) * cols] for i in range(rows)], rows, cols)


def as_matrix(entries: Iterable[Iterable[Number]] | RationalMatrix) -> RationalMatrix:
    return entries if isinstance(entries, RationalMatrix) else RationalMatrix(entries)


# ---------------------------------------------------------------------------
# elimination


def _integer_rows(m: RationalMatrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank-preserving)."""
    out = []
    for r in m._data:
        lcm = 1
        for x in r:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        out.append([int(x * lcm) for x in r])
    return out


def rank(m: RationalMatrix) -> int:
    """Exact rank by fraction-free (Bareiss) elimination."""
    a = _integer_rows(m)
    rows, cols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == rows:
            break
    return r


def nullity(m: RationalMatrix) -> int:
    if m.rows != m.cols:
        raise ValueError("nullity is defined here for square matrices only")
    return m.cols - rank(m)


def determinant(m: RationalMatrix) -> Fraction:
    """Exact determinant (Bareiss on the integer-scaled matrix)."""
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    n = m.rows
    scale = Fraction(1)
    a = []
    for r in m._data:
        lcm = 1
        for x in r:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        scale /= lcm
        a.append([int(x * lcm) for x in r])
    sign = 1
    prev = 1
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * scale * (a[n - 1][n - 1] if n else 1)


def rref(m: RationalMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals, with pivot columns."""
    a = [list(r) for r in m._data]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return a, pivots


def solve(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Return some ``X`` with ``a @ X == b``; raise :class:`NoSolution` if none exists."""
    if a.rows != b.rows:
        raise ValueError(f"row mismatch: {a.shape} vs {b.shape}")
    aug = RationalMatrix([list(ra) + list(rb) for ra, rb in zip(a._data, b._data)], a.rows, a.cols + b.cols)
    red, pivots = rref(aug)
    if any(p >= a.cols for p in pivots):
        raise NoSolution("right-hand side is not in the column space")
    x = [[Fraction(0)] * b.cols for _ in range(a.cols)]
    for i, p in enumerate(pivots):
        x[p] = red[i][a.cols:]
    return RationalMatrix(x, a.cols, b.cols)


def solve_left(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Return some ``X`` with ``X @ a == b``."""
    return solve(a.T, b.T).T


def row_space_basis(m: RationalMatrix) -> RationalMatrix:
    red, pivots = rref(m)
    return RationalMatrix(red[:len(pivots)], len(pivots), m.cols)


def column_basis(m: RationalMatrix) -> RationalMatrix:
    """Columns of ``m`` at the pivot positions (a basis of the column space)."""
    _, pivots = rref(m)
    return m.submatrix(range(m.rows), pivots)


def projection_split(a: RationalMatrix, b: RationalMatrix) -> tuple[RationalMatrix, RationalMatrix]:
    """Split ``b`` into its projection onto col(a) and the orthogonal remainder."""
    if a.rows != b.rows:
        raise ValueError(f"row mismatch: {a.shape} vs {b.shape}")
    basis = column_basis(a)
    if basis.cols == 0:
        return RationalMatrix.zeros(b.rows, b.cols), b
    gram = basis.T @ basis
    coeff = solve(gram, basis.T @ b)
    para = basis @ coeff
    return para, b - para


def symmetric_same_rowspace(b: RationalMatrix) -> RationalMatrix:
    """Symmetric ``RᵀR`` whose row space equals that of ``b``.

    ``R`` is any rational basis of the row space; over the reals
    ``rank(RᵀR) = rank(R)``, so orthonormality is not needed.
    """
    basis = row_space_basis(b)
    if basis.rows == 0:
        return RationalMatrix.zeros(b.cols, b.cols)
    return basis.T @ basis


def same_row_space(x: RationalMatrix, y: RationalMatrix) -> bool:
    if x.cols != y.cols:
        return False
    try:
        solve_left(y, x)
        solve_left(x, y)
    except NoSolution:
        return False
    return True


# ---------------------------------------------------------------------------
# patterns


class Entry(enum.Enum):
    ZERO = "0"
    STAR = "*"
    ANY = "?"


@dataclass(frozen=True)
class PatternMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Entry, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("pattern grid does not match the stated shape")

    def __getitem__(self, ij: tuple[int, int]) -> Entry:
        return self.entries[ij[0]][ij[1]]

    def __str__(self) -> str:
        return "\n".join(" ".join(e.value for e in r) for r in self.entries)


def graph_pattern(g: Graph) -> PatternMatrix:
    rows = tuple(
        tuple(Entry.ANY if i == j else (Entry.STAR if g.has_edge(i, j) else Entry.ZERO) for j in range(g.n))
        for i in range(g.n))
    return PatternMatrix(g.n, g.n, rows)


def probe_order(pg: ProbeGraph) -> list[int]:
    """Probes first, then non-probes, each block in increasing label order."""
    return sorted(pg.probes) + sorted(pg.nonprobes)


def probe_pattern(pg: ProbeGraph) -> PatternMatrix:
    """Pattern of the probe rows, columns in :func:`probe_order`."""
    order = probe_order(pg)
    probes = order[:pg.n - len(pg.nonprobes)]
    rows = tuple(
        tuple(Entry.ANY if u == v else (Entry.STAR if pg.graph.has_edge(u, v) else Entry.ZERO) for v in order)
        for u in probes)
    return PatternMatrix(len(probes), pg.n, rows)


def pattern_of(m: RationalMatrix) -> PatternMatrix:
    rows = tuple(
        tuple(Entry.ANY if i == j else (Entry.STAR if m[i, j] != 0 else Entry.ZERO) for j in range(m.cols))
        for i in range(m.rows))
    return PatternMatrix(m.rows, m.cols, rows)


def matches_pattern(m: RationalMatrix, p: PatternMatrix) -> bool:
    if m.shape != (p.rows, p.cols):
        raise ValueError(f"shape mismatch {m.shape} vs {(p.rows, p.cols)}")
    for i in range(m.rows):
        for j in range(m.cols):
            e = p.entries[i][j]
            if e is Entry.ZERO and m[i, j] != 0:
                return False
            if e is Entry.STAR and m[i, j] == 0:
                return False
    return True


def in_S(m: RationalMatrix, g: Graph) -> bool:
    if m.shape != (g.n, g.n):
        raise ValueError("matrix size does not match the graph")
    return m.is_symmetric() and matches_pattern(m, graph_pattern(g))


def in_S_probe(m: RationalMatrix, pg: ProbeGraph) -> bool:
    """Membership in the probe class (``m`` indexed by the original labels).

    Raises ``ValueError`` for wrong size or an asymmetric matrix.
    """
    if m.shape != (pg.n, pg.n):
        raise ValueError("matrix size does not match the graph")
    if not m.is_symmetric():
        raise ValueError("matrix is not symmetric")
    for i in range(pg.n):
        for j in range(i + 1, pg.n):
            if i in pg.nonprobes and j in pg.nonprobes:
                continue
            if pg.graph.has_edge(i, j) != (m[i, j] != 0):
                return False
    return True


def adjacency_matrix(g: Graph) -> RationalMatrix:
    return RationalMatrix([[1 if g.has_edge(i, j) else 0 for j in range(g.n)] for i in range(g.n)], g.n, g.n)
