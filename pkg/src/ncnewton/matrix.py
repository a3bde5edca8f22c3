"""Matrices over an exact (possibly noncommutative) ring.

Index convention: ``M[k, i]`` is the entry in row ``k`` and column ``i``,
i.e. the pairing y_i^k of basis vector k with dual vector i.  Rows are the
vectors y^k and columns the y_i.  The inverse Z of a square D is stored so
that ``Z[i, k]`` holds z_k^i and ``D @ Z == Z @ D == I``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import ring
from .errors import DuplicateIndex, IndexOutOfBounds, NonGeneric, NotInvertible, VariantMismatch

__all__ = ["Matrix", "check_indices", "submatrix", "invert", "quasidet", "inverse_entry"]


class Matrix:
    """Immutable rectangular array of ring elements, row-major."""

    __slots__ = ("rows", "n_rows", "n_cols")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(r) for r in rows)
        n_cols = len(rows[0]) if rows else 0
        if any(len(r) != n_cols for r in rows):
            raise ValueError("ragged matrix")
        kinds = {ring.variant(x) for r in rows for x in r}
        if len(kinds) > 1:
            raise VariantMismatch(f"mixed ring variants: {sorted(kinds)}")
        self.rows = rows
        self.n_rows = len(rows)
        self.n_cols = n_cols

    @classmethod
    def identity(cls, n: int, like=None) -> "Matrix":
        like = ring.Fraction(1) if like is None else like
        one, zero = ring.one_like(like), ring.zero_like(like)
        return cls([[one if r == c else zero for c in range(n)] for r in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        n = len(values)
        zero = ring.zero_like(values[0]) if n else ring.Fraction(0)
        return cls([[values[r] if r == c else zero for c in range(n)] for r in range(n)])

    @property
    def shape(self):
        return (self.n_rows, self.n_cols)

    @property
    def variant(self):
        return ring.variant(self.rows[0][0]) if self.n_rows and self.n_cols else None

    def __getitem__(self, key):
        k, i = key
        return self.rows[k][i]

    def row(self, k: int) -> tuple:
        """The vector y^k."""
        return self.rows[k]

    def col(self, i: int) -> tuple:
        """The vector y_i."""
        return tuple(r[i] for r in self.rows)

    def leading(self, n: int) -> "Matrix":
        """The order-n truncation D_n (rows and columns 0..n)."""
        if n + 1 > min(self.n_rows, self.n_cols):
            raise IndexOutOfBounds(f"order {n} exceeds matrix shape {self.shape}")
        return Matrix(r[: n + 1] for r in self.rows[: n + 1])

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows)) if self.n_rows else Matrix([])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __matmul__(self, other):
        if self.n_cols != other.n_rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            out.append([_dot(r, c) for c in cols])
        return Matrix(out)

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.rows]!r})"

    def is_identity(self) -> bool:
        if self.n_rows != self.n_cols:
            return False
        return all((x == 1) if r == c else (x == 0)
                   for r, row in enumerate(self.rows) for c, x in enumerate(row))

    def is_lower_unitriangular(self) -> bool:
        return all((x == 1) if r == c else (x == 0)
                   for r, row in enumerate(self.rows) for c, x in enumerate(row) if c >= r)

    def is_upper_unitriangular(self) -> bool:
        return self.transpose().is_lower_unitriangular()

    def is_diagonal(self) -> bool:
        return all(x == 0 for r, row in enumerate(self.rows) for c, x in enumerate(row) if r != c)


def _dot(xs, ys):
    it = iter(zip(xs, ys))
    a, b = next(it)
    total = a * b
    for a, b in it:
        total = total + a * b
    return total


def check_indices(indices: Sequence[int], bound: int, what: str = "index") -> tuple:
    indices = tuple(indices)
    if len(set(indices)) != len(indices):
        raise DuplicateIndex(f"repeated {what} in {list(indices)}")
    for x in indices:
        if not 0 <= x < bound:
            raise IndexOutOfBounds(f"{what} {x} outside 0..{bound - 1}")
    return indices


def submatrix(M: Matrix, cols: Sequence[int], rows: Sequence[int]) -> Matrix:
    """D_{i0..im}^{k0..km}: result[j, l] = M[rows[j], cols[l]]."""
    cols = check_indices(cols, M.n_cols, "column")
    rows = check_indices(rows, M.n_rows, "row")
    return Matrix([[M.rows[k][i] for i in cols] for k in rows])


def invert(M: Matrix) -> Matrix:
    """Exact two-sided inverse by Gauss-Jordan elimination.

    Each column takes the first invertible entry at or below the diagonal as
    pivot. Raises ``NonGeneric(order)`` if column ``order`` has none.
    """
    n = M.n_rows
    if n != M.n_cols:
        raise ValueError(f"cannot invert non-square {M.shape} matrix")
    if n == 0:
        return Matrix([])
    like = M.rows[0][0]
    one, zero = ring.one_like(like), ring.zero_like(like)
    work = [list(r) for r in M.rows]
    aug = [[one if r == c else zero for c in range(n)] for r in range(n)]
    for col in range(n):
        for r in range(col, n):
            try:
                pinv = ring.inverse(work[r][col])
            except NotInvertible:
                continue
            break
        else:
            raise NonGeneric(col)
        work[col], work[r] = work[r], work[col]
        aug[col], aug[r] = aug[r], aug[col]
        # left-multiply the pivot row so that row ops stay valid for noncommutative entries
        work[col] = [pinv * x for x in work[col]]
        aug[col] = [pinv * x for x in aug[col]]
        for r in range(n):
            if r == col:
                continue
            factor = work[r][col]
            if factor == 0:
                continue
            work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
            aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return Matrix(aug)


def inverse_entry(M: Matrix, i: int, j: int):
    """(|M|_i^j)^{-1}, read off the inverse matrix; defined even where the quasideterminant is not."""
    if M.n_rows != M.n_cols or M.n_rows == 0:
        raise ValueError("quasideterminants need a non-empty square matrix")
    check_indices([i], M.n_cols, "column")
    check_indices([j], M.n_rows, "row")
    return invert(M)[i, j]


def quasidet(M: Matrix, i: int, j: int):
    """The (i, j)-quasideterminant: column ``i``, row ``j``.

    Computed as the inverse of entry (i, j) of ``invert(M)``. For a 1 x 1
    matrix this is the single entry; for commuting entries it equals
    (-1)^(i+j) det M / det(M without column i and row j).
    """
    z = inverse_entry(M, i, j)
    try:
        return ring.inverse(z)
    except NotInvertible:
        raise NonGeneric(M.n_rows - 1, f"inverse entry ({i}, {j}) is not invertible") from None
