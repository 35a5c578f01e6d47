"""Dense matrices over the rationals with exact rank, echelon form and kernels.

Entries are :class:`fractions.Fraction`. Rank is computed by fraction-free
(Bareiss) elimination on an integer-scaled copy, so no decision ever depends
on a rounding threshold. Matrices with zero rows or zero columns are legal.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, Sequence, Union

Scalar = Union[int, str, Fraction]


class DimensionMismatch(ValueError):
    """Raised when matrix shapes are incompatible for an operation."""


def to_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact entry")


class Mat:
    """Immutable ``rows x cols`` matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable[Scalar]] = (), cols: int | None = None):
        rows = tuple(tuple(to_fraction(x) for x in row) for row in data)
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionMismatch(f"row {i} has {len(row)} entries, expected {cols}")
        self.rows = len(rows)
        self.cols = cols
        self._data = rows

    @classmethod
    def _wrap(cls, rows: tuple, cols: int) -> "Mat":
        m = object.__new__(cls)
        m.rows = len(rows)
        m.cols = cols
        m._data = rows
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        z = Fraction(0)
        return cls._wrap(tuple((z,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        one, z = Fraction(1), Fraction(0)
        return cls._wrap(tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def column(cls, values: Sequence[Scalar]) -> "Mat":
        return cls([[v] for v in values], cols=1)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(x for row in self._data for x in row)

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.col(j) for j in range(self.cols)]

    @property
    def T(self) -> "Mat":
        return transpose(self)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    def submatrix(self, rows: Sequence[int] | range, cols: Sequence[int] | range) -> "Mat":
        cols = list(cols)
        return Mat._wrap(tuple(tuple(self._data[i][j] for j in cols) for i in rows), len(cols))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._data)
        return f"Mat({self.rows}x{self.cols}: [{body}])"

    def __matmul__(self, other: "Mat") -> "Mat":
        return matmul(self, other)

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Mat._wrap(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __neg__(self) -> "Mat":
        return Mat._wrap(tuple(tuple(-a for a in r) for r in self._data), self.cols)

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def scale(self, c: Scalar) -> "Mat":
        c = to_fraction(c)
        return Mat._wrap(tuple(tuple(c * a for a in r) for r in self._data), self.cols)

    def __pow__(self, k: int) -> "Mat":
        if self.rows != self.cols:
            raise DimensionMismatch(f"power of non-square matrix {self.shape}")
        if k < 0:
            raise ValueError("negative matrix power")
        result, base = Mat.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def apply(self, vec: Sequence[Scalar]) -> tuple[Fraction, ...]:
        """Return ``self @ vec`` for a plain vector."""
        if len(vec) != self.cols:
            raise DimensionMismatch(f"matrix {self.shape} applied to vector of length {len(vec)}")
        v = [to_fraction(x) for x in vec]
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self._data)


def transpose(M: Mat) -> Mat:
    return Mat._wrap(tuple(zip(*M._data)) if M.rows else tuple(() for _ in range(M.cols)), M.rows)


def matmul(A: Mat, B: Mat) -> Mat:
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    bcols = list(zip(*B._data)) if B.rows else [()] * B.cols
    zero = Fraction(0)
    data = tuple(
        tuple(sum((a * b for a, b in zip(row, col) if a and b), zero) for col in bcols)
        for row in A._data
    )
    return Mat._wrap(data, B.cols)


def hstack(*mats: Mat) -> Mat:
    if not mats:
        raise ValueError("hstack needs at least one matrix")
    rows = mats[0].rows
    for M in mats[1:]:
        if M.rows != rows:
            raise DimensionMismatch(
                f"hstack needs equal row counts, got {mats[0].shape} and {M.shape}"
            )
    data = tuple(tuple(x for M in mats for x in M._data[i]) for i in range(rows))
    return Mat._wrap(data, sum(M.cols for M in mats))


def vstack(*mats: Mat) -> Mat:
    if not mats:
        raise ValueError("vstack needs at least one matrix")
    cols = mats[0].cols
    for M in mats[1:]:
        if M.cols != cols:
            raise DimensionMismatch(
                f"vstack needs equal column counts, got {mats[0].shape} and {M.shape}"
            )
    return Mat._wrap(tuple(row for M in mats for row in M._data), cols)


def block(grid: Sequence[Sequence[Mat | None]]) -> Mat:
    """Assemble a block matrix.

    ``None`` entries stand for zero blocks; their size is inferred from the
    other blocks in the same block row and block column. Every block row and
    block column must contain at least one explicit matrix.
    """
    if not grid:
        raise ValueError("empty block grid")
    ncols = len(grid[0])
    if any(len(r) != ncols for r in grid):
        raise DimensionMismatch("block grid rows have different lengths")
    heights: list[int | None] = [None] * len(grid)
    widths: list[int | None] = [None] * ncols
    for i, brow in enumerate(grid):
        for j, M in enumerate(brow):
            if M is None:
                continue
            if heights[i] is None:
                heights[i] = M.rows
            elif heights[i] != M.rows:
                raise DimensionMismatch(
                    f"block ({i},{j}) has shape {M.shape}, block row {i} has height {heights[i]}"
                )
            if widths[j] is None:
                widths[j] = M.cols
            elif widths[j] != M.cols:
                raise DimensionMismatch(
                    f"block ({i},{j}) has shape {M.shape}, block column {j} has width {widths[j]}"
                )
    if None in heights or None in widths:
        raise DimensionMismatch("cannot infer the size of an all-zero block row or column")
    rows = [
        hstack(*(M if M is not None else Mat.zeros(heights[i], widths[j]) for j, M in enumerate(brow)))
        for i, brow in enumerate(grid)
    ]
    return vstack(*rows)


def block_diag(*mats: Mat) -> Mat:
    rows = sum(M.rows for M in mats)
    cols = sum(M.cols for M in mats)
    out = [[Fraction(0)] * cols for _ in range(rows)]
    r0 = c0 = 0
    for M in mats:
        for i in range(M.rows):
            out[r0 + i][c0 : c0 + M.cols] = M._data[i]
        r0 += M.rows
        c0 += M.cols
    return Mat._wrap(tuple(tuple(r) for r in out), cols)


def _integer_rows(M: Mat) -> list[list[int]]:
    # Scaling a row by a nonzero constant preserves rank and row space.
    out = []
    for row in M._data:
        d = reduce(lcm, (x.denominator for x in row), 1)
        out.append([x.numerator * (d // x.denominator) for x in row])
    return out


def rank(M: Mat) -> int:
    """Rank by Bareiss elimination with full pivoting on largest magnitude."""
    rows = [r for r in _integer_rows(M) if any(r)]
    rk, prev = 0, 1
    while rows and rows[0]:
        best, pi, pj = 0, -1, -1
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                if x and abs(x) > best:
                    best, pi, pj = abs(x), i, j
        if best == 0:
            break
        prow = rows.pop(pi)
        piv = prow[pj]
        rest = prow[:pj] + prow[pj + 1 :]
        new_rows = []
        for r in rows:
            f = r[pj]
            r = r[:pj] + r[pj + 1 :]
            if f:
                nr = [(piv * a - f * b) // prev for a, b in zip(r, rest)]
            else:
                nr = [piv * a // prev for a in r]
            if any(nr):
                new_rows.append(nr)
        rows = new_rows
        prev = piv
        rk += 1
    return rk


def _echelon(M: Mat) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form with the column order kept."""
    rows = _integer_rows(M)
    pivots: list[int] = []
    prev = 1
    top = 0
    for j in range(M.cols):
        if top == len(rows):
            break
        cand = [i for i in range(top, len(rows)) if rows[i][j]]
        if not cand:
            continue
        pi = max(cand, key=lambda i: abs(rows[i][j]))
        rows[top], rows[pi] = rows[pi], rows[top]
        prow = rows[top]
        piv = prow[j]
        for i in range(top + 1, len(rows)):
            r = rows[i]
            f = r[j]
            if f:
                rows[i] = [(piv * a - f * b) // prev for a, b in zip(r, prow)]
            else:
                rows[i] = [piv * a // prev for a in r]
        prev = piv
        pivots.append(j)
        top += 1
    return rows, pivots


def rref_with_pivots(M: Mat) -> tuple[Mat, list[int]]:
    rows, pivots = _echelon(M)
    frows = [[Fraction(x) for x in r] for r in rows]
    for k in range(len(pivots) - 1, -1, -1):
        j = pivots[k]
        pr = frows[k]
        piv = pr[j]
        if piv != 1:
            frows[k] = pr = [x / piv for x in pr]
        for i in range(k):
            f = frows[i][j]
            if f:
                frows[i] = [a - f * b for a, b in zip(frows[i], pr)]
    zero = Fraction(0)
    for k in range(len(pivots), len(frows)):
        frows[k] = [zero] * M.cols
    return Mat._wrap(tuple(tuple(r) for r in frows), M.cols), pivots


def rref(M: Mat) -> Mat:
    """Reduced row echelon form, same shape as ``M`` with zero rows last."""
    return rref_with_pivots(M)[0]


def kernel_basis(M: Mat) -> Mat:
    """Columns spanning ``{x : M x = 0}``; ``cols(M) - rank(M)`` of them."""
    R, pivots = rref_with_pivots(M)
    free = [j for j in range(M.cols) if j not in set(pivots)]
    one, zero = Fraction(1), Fraction(0)
    vecs = []
    for f in free:
        v = [zero] * M.cols
        v[f] = one
        for k, pj in enumerate(pivots):
            v[pj] = -R[k, f]
        vecs.append(v)
    if not vecs:
        return Mat.zeros(M.cols, 0)
    return transpose(Mat._wrap(tuple(tuple(v) for v in vecs), M.cols))


def is_invertible(M: Mat) -> bool:
    return M.rows == M.cols and rank(M) == M.rows
