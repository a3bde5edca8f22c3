"""Exact ring elements: rationals and d x d rational blocks.

Rationals are plain :class:`fractions.Fraction` values.  :class:`Block` is a
small square matrix of fractions whose product is noncommutative for d >= 2;
it stands in for the skew-field coefficients of the general theory.  Code
elsewhere in the package only uses ``+``, ``-``, ``*`` and :func:`inverse`, so
either kind of element can fill a matrix.
"""

from __future__ import annotations

import random
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Sequence, Tuple, Union

from .errors import NotInvertible, VariantMismatch

__all__ = [
    "Block",
    "Fraction",
    "RingElement",
    "inverse",
    "is_invertible",
    "one_like",
    "zero_like",
    "ring_add",
    "ring_mul",
    "ring_inverse",
    "variant",
    "random_rational",
    "random_block",
]


class Block:
    """Immutable square matrix of Fractions acting as a ring element."""

    __slots__ = ("dim", "entries", "_hash")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in entries)
        d = len(rows)
        if d == 0 or any(len(r) != d for r in rows):
            raise ValueError("block entries must form a non-empty square array")
        self.dim = d
        self.entries = rows
        self._hash = None

    @classmethod
    def identity(cls, d: int) -> "Block":
        return cls([[1 if r == c else 0 for c in range(d)] for r in range(d)])

    @classmethod
    def zero(cls, d: int) -> "Block":
        return cls([[0] * d for _ in range(d)])

    @classmethod
    def scalar(cls, value, d: int) -> "Block":
        value = Fraction(value)
        return cls([[value if r == c else 0 for c in range(d)] for r in range(d)])

    def _coerce(self, other):
        if isinstance(other, Block):
            if other.dim != self.dim:
                raise VariantMismatch(f"block dims differ: {self.dim} vs {other.dim}")
            return other
        if isinstance(other, (int, _RationalABC)):
            return Block.scalar(other, self.dim)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Block([[a + b for a, b in zip(ra, rb)]
                      for ra, rb in zip(self.entries, other.entries)])

    __radd__ = __add__

    def __neg__(self):
        return Block([[-a for a in row] for row in self.entries])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        cols = list(zip(*other.entries))
        return Block([[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols]
                      for row in self.entries])

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __eq__(self, other):
        if isinstance(other, Block):
            return self.entries == other.entries
        if isinstance(other, (int, _RationalABC)):
            return self == Block.scalar(other, self.dim)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.entries)
        return self._hash

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)
        return f"Block([{body}])"

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def inverse(self) -> "Block":
        """Gauss-Jordan with the first nonzero pivot in each column."""
        d = self.dim
        work = [list(row) + [Fraction(int(r == c)) for c in range(d)]
                for r, row in enumerate(self.entries)]
        for col in range(d):
            pivot_row = next((r for r in range(col, d) if work[r][col] != 0), None)
            if pivot_row is None:
                raise NotInvertible("singular block")
            work[col], work[pivot_row] = work[pivot_row], work[col]
            p = work[col][col]
            work[col] = [x / p for x in work[col]]
            for r in range(d):
                if r != col and work[r][col] != 0:
                    factor = work[r][col]
                    work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
        return Block([row[d:] for row in work])


RingElement = Union[Fraction, Block]


def variant(x) -> Tuple[str, int]:
    """('rational', 1) or ('block', d)."""
    if isinstance(x, Block):
        return ("block", x.dim)
    if isinstance(x, (int, _RationalABC)):
        return ("rational", 1)
    raise VariantMismatch(f"not a ring element: {x!r}")


def _check_same(a, b):
    va, vb = variant(a), variant(b)
    if va != vb:
        raise VariantMismatch(f"{va} vs {vb}")


def zero_like(x) -> RingElement:
    return Block.zero(x.dim) if isinstance(x, Block) else Fraction(0)


def one_like(x) -> RingElement:
    return Block.identity(x.dim) if isinstance(x, Block) else Fraction(1)


def inverse(x) -> RingElement:
    """Two-sided inverse; raises NotInvertible for 0 or a singular block."""
    if isinstance(x, Block):
        return x.inverse()
    if x == 0:
        raise NotInvertible("zero has no inverse")
    return 1 / Fraction(x)


def is_invertible(x) -> bool:
    if isinstance(x, Block):
        try:
            x.inverse()
        except NotInvertible:
            return False
        return True
    return x != 0


def ring_add(a, b) -> RingElement:
    _check_same(a, b)
    return a + b


def ring_mul(a, b) -> RingElement:
    _check_same(a, b)
    return a * b


def ring_inverse(a) -> RingElement:
    variant(a)
    return inverse(a)


# Test-data generators: numerators in [-9, 9], denominators in [-9, 9] \ {0}.

def random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-9, 9), rng.choice([d for d in range(-9, 10) if d]))
        if value != 0 or not nonzero:
            return value


def random_block(rng: random.Random, d: int = 2, invertible: bool = False) -> Block:
    while True:
        b = Block([[random_rational(rng) for _ in range(d)] for _ in range(d)])
        if not invertible or is_invertible(b):
            return b
