"""Seeded random test data: generic matrices, vectors, node sets, polynomials."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .biortho import biorthogonalize
from .errors import NonGeneric
from .matrix import Matrix
from .polynomial import Polynomial
from .ring import random_block, random_rational


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 20240607
    rational_orders: tuple = (1, 2, 3, 4, 5, 6)
    block_orders: tuple = (1, 2, 3, 4)
    block_dim: int = 2
    per_order: int = 20  # 6*20 rational + 4*20 block = 200 instances


@dataclass(frozen=True)
class Instance:
    """A generic matrix of order n with covector f and vector g of matching ring."""

    D: Matrix
    n: int
    f: tuple
    g: tuple
    ring: str


def random_element(rng: random.Random, ring, nonzero=False):
    if ring == "rational":
        return random_rational(rng, nonzero=nonzero)
    return random_block(rng, ring[1], invertible=nonzero)


def random_matrix(rng: random.Random, size: int, ring="rational", nonzero=False) -> Matrix:
    return Matrix([[random_element(rng, ring, nonzero) for _ in range(size)] for _ in range(size)])


def random_generic_matrix(rng: random.Random, n: int, ring="rational", nonzero=False,
                          max_tries=1000) -> Matrix:
    """Order-n matrix on which biorthogonalization succeeds."""
    for _ in range(max_tries):
        D = random_matrix(rng, n + 1, ring, nonzero)
        try:
            biorthogonalize(D, n, verify=False)
        except NonGeneric:
            continue
        return D
    raise RuntimeError(f"no generic matrix of order {n} found in {max_tries} draws")


def random_instance(rng: random.Random, n: int, ring="rational", nonzero=False) -> Instance:
    """``nonzero`` draws only invertible entries, so reordered index sequences rarely hit a singular minor."""
    D = random_generic_matrix(rng, n, ring, nonzero)
    f = tuple(random_element(rng, ring) for _ in range(n + 1))
    g = tuple(random_element(rng, ring) for _ in range(n + 1))
    label = "rational" if ring == "rational" else f"block{ring[1]}"
    return Instance(D, n, f, g, label)


def generic_corpus(config: CorpusConfig = CorpusConfig()) -> list:
    rng = random.Random(config.seed)
    out = []
    for n in config.rational_orders:
        out.extend(random_instance(rng, n) for _ in range(config.per_order))
    for n in config.block_orders:
        out.extend(random_instance(rng, n, ("block", config.block_dim)) for _ in range(config.per_order))
    return out


def random_nodes(rng: random.Random, count: int, nonzero=False) -> list:
    nodes = []
    while len(nodes) < count:
        x = random_rational(rng, nonzero=nonzero)
        if x not in nodes:
            nodes.append(x)
    return nodes


def random_polynomial(rng: random.Random, degree: int) -> Polynomial:
    return Polynomial(random_rational(rng) for _ in range(degree + 1))


def random_spd(rng: random.Random, size: int) -> Matrix:
    """B B^T + I for a random rational B: symmetric positive definite."""
    B = [[random_rational(rng) for _ in range(size)] for _ in range(size)]
    return Matrix([[sum((B[r][t] * B[c][t] for t in range(size)), Fraction(int(r == c)))
                    for c in range(size)] for r in range(size)])
