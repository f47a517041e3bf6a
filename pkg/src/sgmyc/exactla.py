"""Exact rational linear algebra for small dense matrices.

Everything here is exact: entries are Python ints or Fractions, never
floats, so results carry no rounding error at any size that fits in
memory.  Three kernels do the real work.

Determinant and rank use fraction-free Bareiss elimination.  Each update
  m[i][j] <- (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
divides by the previous pivot, and by Sylvester's determinant identity
that division is exact over the integers, which keeps intermediate
growth polynomial instead of exponential.  Rows with rational entries
are scaled to integers first; the determinant is unscaled at the end and
row scaling never changes the rank.

Inertia uses symmetric congruence diagonalization.  A congruence
transform A -> E A E^T preserves the signs of the eigenvalues by
Sylvester's law of inertia, so after diagonalizing it suffices to count
positive, negative and zero diagonal entries.  Zero pivots are repaired
by a symmetric permutation when some later diagonal entry is nonzero,
and otherwise by adding row and column j into the pivot position, which
turns a nonzero off-diagonal a_kj into the pivot 2 a_kj.  When the whole
trailing row is zero the diagonal entry is a genuine zero of the form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatchError, InvalidParamsError, NotSymmetricError

Entry = Union[int, Fraction]


def _normalize(x: Entry) -> Entry:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    if isinstance(x, bool):
        raise InvalidParamsError("matrix entries must be ints or Fractions")
    if not isinstance(x, (int, Fraction)):
        raise InvalidParamsError(f"matrix entries must be ints or Fractions, got {type(x).__name__}")
    return x


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable dense matrix of exact rationals.

    ncols exists because a matrix with zero rows has no row to read the
    width from; it defaults to -1, meaning infer from the entries.  Only
    degenerate shapes like the transpose of a p x 0 incidence matrix
    ever need it spelled out.
    """

    entries: tuple[tuple[Entry, ...], ...]
    ncols: int = -1

    def __post_init__(self) -> None:
        inferred = len(self.entries[0]) if self.entries else 0
        if self.ncols < 0:
            object.__setattr__(self, "ncols", inferred)
        elif self.entries and self.ncols != inferred:
            raise DimensionMismatchError(f"declared {self.ncols} columns, rows have {inferred}")

    @staticmethod
    def from_rows(rows: Iterable[Sequence[Entry]]) -> "RationalMatrix":
        data = tuple(tuple(_normalize(x) for x in row) for row in rows)
        if data and any(len(row) != len(data[0]) for row in data):
            raise DimensionMismatchError("rows have unequal lengths")
        return RationalMatrix(data)

    @staticmethod
    def identity(n: int) -> "RationalMatrix":
        return RationalMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> "RationalMatrix":
        return RationalMatrix(tuple((0,) * cols for _ in range(rows)), cols)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return self.ncols

    def entry(self, i: int, j: int) -> Entry:
        return self.entries[i][j]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        e = self.entries
        return all(e[i][j] == e[j][i] for i in range(self.rows) for j in range(i + 1, self.rows))


@dataclass(frozen=True)
class Inertia:
    """Counts of positive, negative and zero eigenvalues of a symmetric matrix."""

    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def rank(self) -> int:
        return self.n_plus + self.n_minus

    def __add__(self, other: "Inertia") -> "Inertia":
        return Inertia(self.n_plus + other.n_plus, self.n_minus + other.n_minus, self.n_zero + other.n_zero)


def transpose(a: RationalMatrix) -> RationalMatrix:
    if a.cols == 0:
        return RationalMatrix((), a.rows)
    if a.rows == 0:
        return RationalMatrix(((),) * a.cols, 0)
    return RationalMatrix(tuple(zip(*a.entries)))


def multiply(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.cols != b.rows:
        raise DimensionMismatchError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = list(zip(*b.entries)) if b.entries else [()] * b.cols
    return RationalMatrix(
        tuple(
            tuple(_normalize(sum(x * y for x, y in zip(row, col))) for col in bt)
            for row in a.entries
        ),
        b.cols,
    )


def add(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.rows != b.rows or a.cols != b.cols:
        raise DimensionMismatchError(f"shape mismatch {a.rows}x{a.cols} vs {b.rows}x{b.cols}")
    return RationalMatrix(
        tuple(tuple(_normalize(x + y) for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries)),
        a.cols,
    )


def subtract(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.rows != b.rows or a.cols != b.cols:
        raise DimensionMismatchError(f"shape mismatch {a.rows}x{a.cols} vs {b.rows}x{b.cols}")
    return RationalMatrix(
        tuple(tuple(_normalize(x - y) for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries)),
        a.cols,
    )


def block(grid: Sequence[Sequence[RationalMatrix]]) -> RationalMatrix:
    """Assemble a matrix from a grid of blocks with matching shapes."""
    rows: list[tuple[Entry, ...]] = []
    width = None
    for band in grid:
        height = band[0].rows
        if any(blk.rows != height for blk in band):
            raise DimensionMismatchError("blocks in one band have different heights")
        for i in range(height):
            row: tuple[Entry, ...] = ()
            for blk in band:
                row = row + blk.entries[i]
            rows.append(row)
        if width is None:
            width = len(rows[-1]) if height else None
        elif height and len(rows[-1]) != width:
            raise DimensionMismatchError("bands have different widths")
    return RationalMatrix(tuple(rows))


def _integer_rows(a: RationalMatrix) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers.  Returns rows and the total scale factor."""
    out: list[list[int]] = []
    scale = Fraction(1)
    for row in a.entries:
        mult = lcm(*(x.denominator for x in row if isinstance(x, Fraction)), 1)
        scale *= mult
        out.append([int(x * mult) for x in row])
    return out, scale


def determinant(a: RationalMatrix) -> Entry:
    """Exact determinant by fraction-free elimination."""
    if not a.is_square():
        raise DimensionMismatchError(f"determinant needs a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    if n == 0:
        return 1
    m, scale = _integer_rows(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        row_k = m[k]
        pivval = row_k[k]
        for i in range(k + 1, n):
            row_i = m[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivval * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivval
    det = sign * m[n - 1][n - 1]
    return det if scale == 1 else _normalize(Fraction(det) / scale)


def rank(a: RationalMatrix) -> int:
    """Exact rank by fraction-free elimination with column skipping."""
    if a.rows == 0 or a.cols == 0:
        return 0
    m, _ = _integer_rows(a)
    nr, nc = a.rows, a.cols
    r = 0
    prev = 1
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        row_r = m[r]
        pivval = row_r[c]
        for i in range(r + 1, nr):
            row_i = m[i]
            mic = row_i[c]
            for j in range(c + 1, nc):
                row_i[j] = (pivval * row_i[j] - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = pivval
        r += 1
        if r == nr:
            break
    return r


def _swap_symmetric(w: list[list[Fraction]], k: int, j: int) -> None:
    w[k], w[j] = w[j], w[k]
    for row in w:
        row[k], row[j] = row[j], row[k]


def inertia(a: RationalMatrix) -> Inertia:
    """Signature of a symmetric matrix by congruence diagonalization."""
    if not a.is_square():
        raise NotSymmetricError(f"inertia needs a square matrix, got {a.rows}x{a.cols}")
    if not a.is_symmetric():
        raise NotSymmetricError("matrix is not symmetric")
    n = a.rows
    w = [[Fraction(x) for x in row] for row in a.entries]
    for k in range(n):
        if w[k][k] == 0:
            j = next((j for j in range(k + 1, n) if w[j][j] != 0), None)
            if j is not None:
                _swap_symmetric(w, k, j)
            else:
                j = next((j for j in range(k + 1, n) if w[k][j] != 0), None)
                if j is None:
                    continue
                # trailing diagonal is all zero: fold row and column j into k,
                # the pivot becomes 2 * w[k][j]
                for t in range(n):
                    w[k][t] += w[j][t]
                for t in range(n):
                    w[t][k] += w[t][j]
        piv = w[k][k]
        for i in range(k + 1, n):
            f = w[i][k] / piv
            if f:
                row_i = w[i]
                row_k = w[k]
                for t in range(k, n):
                    row_i[t] -= f * row_k[t]
        # row operations above already produce the congruence values in the
        # trailing block; clearing row k mirrors them onto the column side
        for t in range(k + 1, n):
            w[k][t] = Fraction(0)
    plus = sum(1 for k in range(n) if w[k][k] > 0)
    minus = sum(1 for k in range(n) if w[k][k] < 0)
    return Inertia(plus, minus, n - plus - minus)


def is_congruent_product(p: RationalMatrix, b: RationalMatrix, target: RationalMatrix) -> bool:
    """Whether p * b * p^T equals target, exactly."""
    prod = multiply(multiply(p, b), transpose(p))
    if prod.rows != target.rows or prod.cols != target.cols:
        raise DimensionMismatchError("product shape does not match target")
    return prod == target


# ---------------------------------------------------------------------------
# serialization helpers


def format_entry(x: Entry) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x) if isinstance(x, Fraction) else x)


def parse_entry(s: str) -> Entry:
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return _normalize(Fraction(int(num), int(den)))
    return int(s)


def to_json_rows(a: RationalMatrix) -> list[list[int | str]]:
    """JSON-safe rows: ints stay ints, true fractions become 'n/d' strings."""
    return [[x if isinstance(x, int) else format_entry(x) for x in row] for row in a.entries]


def from_json_rows(rows: Sequence[Sequence[int | str]]) -> RationalMatrix:
    return RationalMatrix.from_rows(
        [[x if isinstance(x, int) else parse_entry(x) for x in row] for row in rows]
    )
