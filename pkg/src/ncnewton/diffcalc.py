"""Left and right difference derivatives, the inverse-matrix sum and the Newton expansion.

Data layout: ``f`` is indexed by column (f_i = (f, p_i)) and ``g`` by row
(g^k = (v^k, g)).  Right derivatives multiply inverses on the right, left
derivatives on the left; for noncommuting entries the order matters.

Entries of ``g`` need not be ring elements: anything that supports ``+``,
``-`` and left multiplication by ring elements works, e.g. a
:class:`~ncnewton.polynomial.Polynomial` for the symbolic vector g^k = x^k.
The same goes for ``f`` with right multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import ring
from .biortho import biorthogonalize, biorthogonalize_permuted
from .errors import IndexOutOfBounds, NonGeneric, NotInvertible
from .matrix import Matrix, check_indices, invert, submatrix

__all__ = [
    "ALGORITHMS",
    "NewtonTerm",
    "NewtonExpansion",
    "delta_right",
    "delta_left",
    "inverse_via_theorem6",
    "pairing_truncated",
    "newton_expand",
]

ALGORITHMS = ("recurrence", "quasidet", "biortho")


def _sum(terms):
    it = iter(terms)
    total = next(it)
    for t in it:
        total = total + t
    return total


def _inv(x, order):
    try:
        return ring.inverse(x)
    except NotInvertible:
        raise NonGeneric(order) from None


def _prepare(D, cols, rows, data, what):
    cols = check_indices(cols, D.n_cols, "column")
    rows = check_indices(rows, D.n_rows, "row")
    if len(cols) != len(rows) or not cols:
        raise ValueError("cols and rows must be non-empty and of equal length")
    needed = cols if what == "f" else rows
    if max(needed) >= len(data):
        raise IndexOutOfBounds(f"{what} has {len(data)} entries, index {max(needed)} requested")
    return cols, rows


def delta_right(f: Sequence, D: Matrix, cols: Sequence[int], rows: Sequence[int],
                algorithm: str = "biortho"):
    """(Delta_R^m f) with lower indices ``cols`` = i_0..i_m and upper ``rows`` = k_0..k_m.

    ``recurrence`` runs the difference-quotient recursion (memoized),
    ``quasidet`` sums f_{i_j} (|D_sub|_j^m)^{-1} and ``biortho`` sums
    f_{i_j} a_m^j.  All three agree whenever each is defined.
    """
    cols, rows = _prepare(D, cols, rows, f, "f")
    m = len(cols) - 1
    if algorithm == "recurrence":
        return _right_recurrence(f, D, cols, rows)
    if algorithm == "quasidet":
        sub = submatrix(D, cols, rows)
        try:
            Z = invert(sub)
        except NonGeneric:
            raise NonGeneric(m) from None
        return _sum(f[i] * Z[j, m] for j, i in enumerate(cols))
    if algorithm == "biortho":
        res = biorthogonalize_permuted(D, cols, rows)
        return _sum(f[i] * res.A[j, m] for j, i in enumerate(cols))
    raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")


def delta_left(g: Sequence, D: Matrix, cols: Sequence[int], rows: Sequence[int],
               algorithm: str = "biortho"):
    """(Delta_L^m g), the mirror of :func:`delta_right` with inverses on the left."""
    cols, rows = _prepare(D, cols, rows, g, "g")
    m = len(cols) - 1
    if algorithm == "recurrence":
        return _left_recurrence(g, D, cols, rows)
    if algorithm == "quasidet":
        sub = submatrix(D, cols, rows)
        try:
            Z = invert(sub)
        except NonGeneric:
            raise NonGeneric(m) from None
        return _sum(Z[m, l] * g[k] for l, k in enumerate(rows))
    if algorithm == "biortho":
        res = biorthogonalize_permuted(D, cols, rows)
        return _sum(res.C[m, l] * g[k] for l, k in enumerate(rows))
    raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")


def _right_recurrence(f, D, cols, rows):
    # h is None for f itself, or a row index k standing for the vector y^k
    memo = {}

    def value(h, i):
        return f[i] if h is None else D[h, i]

    def rec(I, K, h):
        key = (I, K, h)
        if key in memo:
            return memo[key]
        m = len(I) - 1
        if m == 0:
            out = value(h, I[0]) * _inv(D[K[0], I[0]], 0)
        else:
            alt = I[: m - 1] + I[m:]
            num = rec(I[:m], K[:m], h) - rec(alt, K[:m], h)
            den = rec(I[:m], K[:m], K[m]) - rec(alt, K[:m], K[m])
            out = num * _inv(den, m)
        memo[key] = out
        return out

    return rec(tuple(cols), tuple(rows), None)


def _left_recurrence(g, D, cols, rows):
    # h is None for g itself, or a column index i standing for the vector y_i
    memo = {}

    def value(h, k):
        return g[k] if h is None else D[k, h]

    def rec(I, K, h):
        key = (I, K, h)
        if key in memo:
            return memo[key]
        m = len(I) - 1
        if m == 0:
            out = _inv(D[K[0], I[0]], 0) * value(h, K[0])
        else:
            alt = K[: m - 1] + K[m:]
            den = rec(I[:m], K[:m], I[m]) - rec(I[:m], alt, I[m])
            num = rec(I[:m], K[:m], h) - rec(I[:m], alt, h)
            out = _inv(den, m) * num
        memo[key] = out
        return out

    return rec(tuple(cols), tuple(rows), None)


def inverse_via_theorem6(D: Matrix, n: int) -> Matrix:
    """Z_n with Z[i, k] = sum_{m >= max(i, k)} (|D_m|_i^m)^{-1} |D_m|_m^m (|D_m|_m^k)^{-1}.

    The inverse quasideterminants are the entries of A and C from a single
    biorthogonalization pass.
    """
    res = biorthogonalize(D, n)
    A, C, piv = res.A, res.C, res.pivots
    return Matrix([[_sum(A[i, m] * piv[m] * C[m, k] for m in range(max(i, k), n + 1))
                    for k in range(n + 1)] for i in range(n + 1)])


def pairing_truncated(f: Sequence, g: Sequence, D: Matrix, n: int, method: str = "theorem6"):
    """(f, g)_n = sum_{i,k <= n} f_i z_k^i g^k."""
    if len(f) < n + 1 or len(g) < n + 1:
        raise IndexOutOfBounds(f"f and g need at least {n + 1} entries")
    if method == "theorem6":
        Z = inverse_via_theorem6(D, n)
    elif method == "elimination":
        Z = invert(D.leading(n))
    else:
        raise ValueError(f"unknown method {method!r}")
    return _sum(f[i] * Z[i, k] * g[k] for i in range(n + 1) for k in range(n + 1))


@dataclass(frozen=True)
class NewtonTerm:
    delta_right: object
    pivot: object
    delta_left: object

    def value(self):
        return self.delta_right * self.pivot * self.delta_left


@dataclass(frozen=True)
class NewtonExpansion:
    order: int
    terms: tuple

    def total(self):
        return _sum(t.value() for t in self.terms)

    def partial_sums(self) -> list:
        out, acc = [], None
        for t in self.terms:
            acc = t.value() if acc is None else acc + t.value()
            out.append(acc)
        return out


def newton_expand(f: Sequence, g: Sequence, D: Matrix, n: int,
                  algorithm: str = "biortho") -> NewtonExpansion:
    """Terms (Delta_R^m f, |D_m|_m^m, Delta_L^m g) for m = 0..n with standard index sequences.

    The sum of term products equals ``pairing_truncated(f, g, D, n)``.
    """
    if len(f) < n + 1 or len(g) < n + 1:
        raise IndexOutOfBounds(f"f and g need at least {n + 1} entries")
    res = biorthogonalize(D, n)
    terms = []
    for m in range(n + 1):
        if algorithm == "biortho":
            dr = _sum(f[i] * res.A[i, m] for i in range(m + 1))
            dl = _sum(res.C[m, k] * g[k] for k in range(m + 1))
        else:
            idx = range(m + 1)
            dr = delta_right(f, D, idx, idx, algorithm)
            dl = delta_left(g, D, idx, idx, algorithm)
        terms.append(NewtonTerm(dr, res.pivots[m], dl))
    return NewtonExpansion(order=n, terms=tuple(terms))
