"""Dense univariate polynomials with Fraction coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Iterable, Sequence

__all__ = ["Polynomial", "X"]


class Polynomial:
    """Ascending-degree coefficients, trailing zeros stripped.

    Rational scalars multiply from either side, which is what lets a
    polynomial-valued vector g^k = x^k flow through the same left/right
    difference formulas as ring-valued data.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "Polynomial":
        return cls([0] * k + [coeff])

    @classmethod
    def from_roots(cls, roots: Sequence) -> "Polynomial":
        """prod (x - r)."""
        p = cls([1])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def degree(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, times: int = 1) -> "Polynomial":
        cs = self.coeffs
        for _ in range(times):
            cs = [k * c for k, c in enumerate(cs)][1:]
        return Polynomial(cs)

    def derivatives_at(self, x0, count: int) -> list:
        """[f(x0), f'(x0), ..., f^(count-1)(x0)]."""
        out, p = [], self
        for _ in range(count):
            out.append(p(x0))
            p = p.derivative()
        return out

    def shift(self, x0) -> "Polynomial":
        """Coefficients in powers of (x - x0), as a polynomial in that variable."""
        return Polynomial([d / factorial(k) for k, d in enumerate(self.derivatives_at(x0, len(self.coeffs)))])

    def truncate(self, n: int) -> "Polynomial":
        return Polynomial(self.coeffs[: n + 1])

    def __add__(self, other):
        if isinstance(other, (int, Rational)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Rational)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return Polynomial([c * other for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return Polynomial([other * c for c in self.coeffs])
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return Polynomial([c / other for c in self.coeffs])
        return NotImplemented

    def __pow__(self, k: int):
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "Polynomial"):
        """Long division; returns (quotient, remainder)."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(), Polynomial(rem)
        quot = [Fraction(0)] * (dq + 1)
        for s in range(dq, -1, -1):
            c = rem[s + len(other.coeffs) - 1] / lead
            quot[s] = c
            for j, b in enumerate(other.coeffs):
                rem[s + j] -= c * b
        return Polynomial(quot), Polynomial(rem)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(terms).replace("+ -", "- ")


X = Polynomial([0, 1])
