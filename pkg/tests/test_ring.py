import random
from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncnewton.errors import NotInvertible, VariantMismatch
from ncnewton.ring import Block, inverse, ring_add, ring_inverse, ring_mul, random_block, random_rational

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)


def test_add_examples():
    assert ring_add(F(1, 2), F(1, 3)) == F(5, 6)
    a = F(-7, 3)
    assert ring_add(a, F(0)) == a
    assert ring_add(Block([[0, 1], [1, 0]]), Block([[1, 0], [0, 1]])) == Block([[1, 1], [1, 1]])


def test_mul_examples():
    assert ring_mul(F(2, 3), F(3, 4)) == F(1, 2)
    a = Block([[F(1, 2), 3], [-1, 4]])
    assert ring_mul(a, Block.identity(2)) == a
    x, y = Block([[0, 1], [0, 0]]), Block([[0, 0], [1, 0]])
    assert ring_mul(x, y) == Block([[1, 0], [0, 0]])
    assert ring_mul(y, x) == Block([[0, 0], [0, 1]])
    assert ring_mul(x, y) != ring_mul(y, x)


def test_inverse_examples():
    assert ring_inverse(F(2, 3)) == F(3, 2)
    with pytest.raises(NotInvertible):
        ring_inverse(F(0))
    # adjugate of [[1,1],[0,1]] is [[1,-1],[0,1]], determinant 1
    assert ring_inverse(Block([[1, 1], [0, 1]])) == Block([[1, -1], [0, 1]])
    with pytest.raises(NotInvertible):
        inverse(Block([[1, 2], [2, 4]]))


def test_variant_mismatch():
    with pytest.raises(VariantMismatch):
        ring_add(F(1), Block.identity(2))
    with pytest.raises(VariantMismatch):
        ring_mul(Block.identity(2), Block.identity(3))
    with pytest.raises(VariantMismatch):
        Block.identity(2) + Block.identity(3)


def test_rational_axioms_seeded():
    rng = random.Random(11)
    for _ in range(10_000):
        a, b, c = (random_rational(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        for x in (a + b, a * b, a - c):
            assert gcd(x.numerator, x.denominator) == 1 and x.denominator > 0


@given(rationals, rationals, rationals)
def test_rational_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert (a + b) * c == a * c + b * c


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_block_inverse_two_sided(d):
    rng = random.Random(d)
    one = Block.identity(d)
    for _ in range(40):
        a = random_block(rng, d, invertible=True)
        b = inverse(a)
        assert a * b == one and b * a == one


def test_block_associative_distributive():
    rng = random.Random(5)
    for _ in range(200):
        a, b, c = (random_block(rng, 3) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c


def test_block_noncommutative_witness():
    rng = random.Random(0)
    a, b = random_block(rng), random_block(rng)
    assert a * b != b * a


def test_scalar_mixing():
    b = Block([[1, 2], [3, 4]])
    assert F(1, 2) * b == Block([[F(1, 2), 1], [F(3, 2), 2]])
    assert b * 2 == b + b
    assert b - b == 0
