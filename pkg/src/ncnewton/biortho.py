"""Biorthogonalization of the dual bases {v^k} and {p_i}.

Given the pairing matrix D (``D[k, i] = (v^k, p_i)``) the process builds

* ``w^m = sum_k c_k^m v^k``  (row m of the lower triangular C), and
* ``q_m = sum_i p_i a_m^i``  (column m of the upper triangular A),

with ``(w^m, p_i) = 0`` for i < m, ``(w^m, p_m) = 1``, ``(v^k, q_m) = 0`` for
k < m and ``(v^m, q_m) = 1``.  Then ``D_n A_n`` is lower unitriangular,
``C_n D_n`` is upper unitriangular and ``D_n^{-1} = A_n diag(pivots) C_n``
where ``pivots[m] = |D_m|_m^m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence

from . import ring
from .errors import ConsistencyError, NonGeneric, NotInvertible
from .matrix import Matrix, check_indices, quasidet, submatrix

__all__ = ["BiorthoResult", "biorthogonalize", "biorthogonalize_permuted"]


@dataclass(frozen=True)
class BiorthoResult:
    order: int
    A: Matrix  # A[i, m] = a_m^i
    C: Matrix  # C[m, k] = c_k^m
    pivots: tuple  # pivots[m] = |D_m|_m^m

    def factor_B(self) -> Matrix:
        return Matrix.diagonal(list(self.pivots))

    def inverse(self) -> Matrix:
        """A diag(pivots) C, the inverse of the truncation D_n."""
        return self.A @ self.factor_B() @ self.C


def biorthogonalize(D: Matrix, n: int, verify: bool = True) -> BiorthoResult:
    """Run the process on the order-n truncation of ``D``.

    Works incrementally: step m orthogonalizes p_m against q_0..q_{m-1} and
    v^m against w^0..w^{m-1}, so the whole run costs O(n^3) ring operations.
    The corner pivot is produced twice, once from each side, and with
    ``verify`` also as ``quasidet(D_m, m, m)``; any disagreement raises
    ConsistencyError.  A non-invertible pivot raises ``NonGeneric(m)``.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    Dn = D.leading(n)
    like = Dn[0, 0]
    zero = ring.zero_like(like)
    y = Dn.rows  # y[k][i]

    a_cols: List[list] = []   # a_cols[m][i] = a_m^i, i <= m
    c_rows: List[list] = []   # c_rows[m][k] = c_k^m, k <= m
    pivots: list = []

    for m in range(n + 1):
        # (w^j, p_m) and (v^m, q_j) for the existing j < m
        w_pm = [_sum(c_rows[j][k] * y[k][m] for k in range(j + 1)) for j in range(m)]
        vm_q = [_sum(y[m][i] * a_cols[j][i] for i in range(j + 1)) for j in range(m)]

        # q~ = p_m - sum_j q_j pivot_j (w^j, p_m), in p-coordinates
        a_raw = []
        for i in range(m):
            a_raw.append(-_sum(a_cols[j][i] * pivots[j] * w_pm[j] for j in range(i, m)))
        a_raw.append(ring.one_like(like))
        # w~ = v^m - sum_j (v^m, q_j) pivot_j w^j, in v-coordinates
        c_raw = []
        for k in range(m):
            c_raw.append(-_sum(vm_q[j] * pivots[j] * c_rows[j][k] for j in range(k, m)))
        c_raw.append(ring.one_like(like))

        right = _sum(y[m][i] * a_raw[i] for i in range(m + 1))  # (v^m, q~)
        left = _sum(c_raw[k] * y[k][m] for k in range(m + 1))   # (w~, p_m)
        if right != left:
            raise ConsistencyError(f"corner pivot mismatch at order {m}: {left} vs {right}")
        try:
            t_inv = ring.inverse(left)
        except NotInvertible:
            raise NonGeneric(m) from None
        if verify and m > 0:
            qd = quasidet(Dn.leading(m), m, m)
            if qd != left:
                raise ConsistencyError(f"pivot {left} != quasideterminant {qd} at order {m}")

        a_cols.append([x * t_inv for x in a_raw])
        c_rows.append([t_inv * x for x in c_raw])
        pivots.append(left)

    A = Matrix([[a_cols[m][i] if i <= m else zero for m in range(n + 1)] for i in range(n + 1)])
    C = Matrix([[c_rows[m][k] if k <= m else zero for k in range(n + 1)] for m in range(n + 1)])
    return BiorthoResult(order=n, A=A, C=C, pivots=tuple(pivots))


def biorthogonalize_permuted(D: Matrix, cols: Sequence[int], rows: Sequence[int],
                             verify: bool = True) -> BiorthoResult:
    """Biorthogonalize the reordered bases p_{i_0}, p_{i_1}, ... and v^{k_0}, v^{k_1}, ..."""
    cols = check_indices(cols, D.n_cols, "column")
    rows = check_indices(rows, D.n_rows, "row")
    if len(cols) != len(rows) or not cols:
        raise ValueError("cols and rows must be non-empty and of equal length")
    return biorthogonalize(submatrix(D, cols, rows), len(cols) - 1, verify=verify)


def _sum(terms):
    it = iter(terms)
    total = next(it)
    for t in it:
        total = total + t
    return total
