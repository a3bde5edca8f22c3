"""Commutative specializations: Newton and Taylor interpolation, Gram-Schmidt.

With ``D[k, i] = x_i^k`` the general expansion collapses to the Newton
divided-difference formula; with ``D[k, i] = (d/dx)^i x^k`` at a single
point it collapses to Taylor's formula; with a symmetric positive definite
Gram matrix the process is Gram-Schmidt.  The plain classical algorithms
(``divided_difference``, ``taylor_polynomial``, ``lagrange_solve``) live
here too, as independent references.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .biortho import BiorthoResult, biorthogonalize
from .diffcalc import delta_right, newton_expand
from .errors import DuplicateNode, NonGeneric, NotPositiveDefinite
from .matrix import Matrix, invert
from .polynomial import Polynomial

__all__ = [
    "GramData",
    "vandermonde",
    "taylor_matrix",
    "monomials",
    "newton_interpolate",
    "taylor_interpolate",
    "confluent_limit_check",
    "gram_schmidt",
    "divided_difference",
    "taylor_polynomial",
    "lagrange_solve",
    "complete_homogeneous",
]


def _check_nodes(nodes):
    nodes = [Fraction(x) for x in nodes]
    if len(set(nodes)) != len(nodes):
        raise DuplicateNode(f"nodes must be pairwise distinct: {[str(x) for x in nodes]}")
    return nodes


def vandermonde(nodes: Sequence, n: int) -> Matrix:
    """Entry (row k, column i) is x_i^k for 0 <= i, k <= n."""
    nodes = _check_nodes(nodes)
    if n + 1 > len(nodes):
        raise ValueError(f"order {n} needs {n + 1} nodes, got {len(nodes)}")
    return Matrix([[x ** k for x in nodes[: n + 1]] for k in range(n + 1)])


def taylor_matrix(x0, n: int) -> Matrix:
    """Entry (row k, column i) is the i-th derivative of x^k at x0."""
    x0 = Fraction(x0)
    return Matrix([[Fraction(factorial(k), factorial(k - i)) * x0 ** (k - i) if i <= k else Fraction(0)
                    for i in range(n + 1)] for k in range(n + 1)])


def monomials(n: int) -> list:
    """The symbolic vector g^k = x^k, k = 0..n."""
    return [Polynomial.monomial(k) for k in range(n + 1)]


def newton_interpolate(nodes: Sequence, values: Sequence, n: int):
    """Interpolate ``values`` at the first n+1 nodes.

    Returns ``(expansion, polynomial)``; ``expansion.terms[m].delta_right`` is
    the m-th divided difference and ``pivot * delta_left`` the Newton basis
    polynomial (x - x_0)...(x - x_{m-1}).
    """
    D = vandermonde(nodes, n)
    if len(values) < n + 1:
        raise ValueError(f"order {n} needs {n + 1} values, got {len(values)}")
    f = [Fraction(v) for v in values[: n + 1]]
    try:
        expansion = newton_expand(f, monomials(n), D, n)
    except NonGeneric as exc:  # pragma: no cover - Vandermonde with distinct nodes is always generic
        raise AssertionError(f"distinct nodes gave a non-generic Vandermonde matrix: {exc}") from exc
    return expansion, expansion.total()


def taylor_interpolate(x0, derivs: Sequence, n: int):
    """Expansion and Taylor polynomial from derivs[i] = f^(i)(x0), i <= n."""
    if len(derivs) < n + 1:
        raise ValueError(f"order {n} needs {n + 1} derivatives, got {len(derivs)}")
    D = taylor_matrix(x0, n)
    f = [Fraction(d) for d in derivs[: n + 1]]
    expansion = newton_expand(f, monomials(n), D, n)
    return expansion, expansion.total()


def confluent_limit_check(f: Polynomial, x0, m: int, eps):
    """(Delta^m f at x0, x0+eps, ..., x0+m*eps; f^(m)(x0)/m!).

    The first value comes from the general machinery on a Vandermonde
    matrix; as eps -> 0 it tends to the second.
    """
    x0, eps = Fraction(x0), Fraction(eps)
    if eps == 0:
        raise DuplicateNode("eps = 0 makes all nodes coincide")
    nodes = [x0 + j * eps for j in range(m + 1)]
    D = vandermonde(nodes, m)
    values = [f(x) for x in nodes]
    idx = range(m + 1)
    dd = delta_right(values, D, idx, idx)
    target = f.derivative(m)(x0) / factorial(m)
    return dd, target


@dataclass(frozen=True)
class GramData:
    """Symmetric positive definite Gram matrix G[k, i] = (v^k, v^i)."""

    G: Matrix

    def __post_init__(self):
        if self.G != self.G.transpose():
            raise NotPositiveDefinite("Gram matrix is not symmetric")


def gram_schmidt(G, n: int) -> BiorthoResult:
    """Orthogonalize v^0..v^n; row m of C holds w^m with (w^m, v^m) = 1.

    Positive definiteness is checked through the leading pivots, which are
    all strictly positive exactly when G is positive definite.
    """
    if isinstance(G, GramData):
        G = G.G
    else:
        G = GramData(G).G
    try:
        res = biorthogonalize(G, n)
    except NonGeneric as exc:
        raise NotPositiveDefinite(f"zero leading pivot at order {exc.order}") from None
    for m, p in enumerate(res.pivots):
        if p <= 0:
            raise NotPositiveDefinite(f"leading pivot {p} at order {m} is not positive")
    return res


# Classical references, kept independent of the machinery above.

def divided_difference(values: Sequence, nodes: Sequence):
    """Delta^m f(x_0..x_m) by the textbook recursion on (x_{m-1}, x_m)."""
    nodes = [Fraction(x) for x in nodes]
    values = [Fraction(v) for v in values]
    if len(nodes) == 1:
        return values[0]
    head = divided_difference(values[:-1], nodes[:-1])
    tail = divided_difference(values[:-2] + values[-1:], nodes[:-2] + nodes[-1:])
    return (head - tail) / (nodes[-2] - nodes[-1])


def taylor_polynomial(f: Polynomial, x0, n: int) -> Polynomial:
    """sum_{m <= n} f^(m)(x0) (x - x0)^m / m!."""
    x0 = Fraction(x0)
    shift = Polynomial([-x0, 1])
    out = Polynomial()
    for m, d in enumerate(f.derivatives_at(x0, n + 1)):
        out = out + (shift ** m) * (d / factorial(m))
    return out


def lagrange_solve(nodes: Sequence, values: Sequence) -> Polynomial:
    """Coefficients of the interpolating polynomial by solving V c = values."""
    nodes = _check_nodes(nodes)
    V = Matrix([[x ** k for k in range(len(nodes))] for x in nodes])
    Vinv = invert(V)
    vals = [Fraction(v) for v in values]
    return Polynomial([sum((Vinv[r, c] * vals[c] for c in range(len(vals))), Fraction(0))
                       for r in range(len(nodes))])


def complete_homogeneous(degree: int, xs: Sequence) -> Fraction:
    """h_degree(xs) via the generating recursion h_d(x_1..x_n) = h_d(x_1..x_{n-1}) + x_n h_{d-1}(x_1..x_n)."""
    xs = [Fraction(x) for x in xs]
    h = [Fraction(1)] + [Fraction(0)] * degree
    for x in xs:
        for d in range(1, degree + 1):
            h[d] = h[d] + x * h[d - 1]
    return h[degree]

