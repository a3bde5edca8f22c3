import random
from fractions import Fraction as F
from math import factorial

import pytest

from ncnewton.applications import taylor_matrix, vandermonde
from ncnewton.biortho import biorthogonalize, biorthogonalize_permuted
from ncnewton.errors import DuplicateIndex, NonGeneric
from ncnewton.matrix import Matrix, invert, quasidet
from ncnewton.ring import inverse
from ncnewton.sampling import random_generic_matrix

from oracles import dense_biortho

RINGS = ["rational", ("block", 2)]


def _instances(ring, count=12, max_n=6, seed=0):
    rng = random.Random(seed)
    for t in range(count):
        n = 1 + t % max_n
        yield random_generic_matrix(rng, n, ring), n


def test_identity():
    res = biorthogonalize(Matrix.identity(4), 3)
    assert res.A == Matrix.identity(4) and res.C == Matrix.identity(4)
    assert res.pivots == (1, 1, 1, 1)


def test_vandermonde_pivots():
    # (x_m - x_0)...(x_m - x_{m-1}) at nodes 0, 1, 2: 1, 1, 2
    assert biorthogonalize(vandermonde([0, 1, 2], 2), 2).pivots == (1, 1, 2)


@pytest.mark.parametrize("x0", [F(0), F(1), F(-5, 3)])
def test_taylor_pivots_are_factorials(x0):
    res = biorthogonalize(taylor_matrix(x0, 6), 6)
    assert res.pivots == tuple(factorial(m) for m in range(7))


def test_permuted_examples():
    V = vandermonde([0, 1, 2], 2)
    assert biorthogonalize_permuted(V, (0, 1, 2), (0, 1, 2)) == biorthogonalize(V, 2)
    # relabeled nodes (2, 1, 0): pivot[2] = (0 - 2)(0 - 1)
    assert biorthogonalize_permuted(V, (2, 1, 0), (0, 1, 2)).pivots[2] == 2
    D = Matrix([[F(3), F(5)], [F(7), F(11)]])
    assert biorthogonalize_permuted(D, (1,), (0,)).pivots == (5,)
    with pytest.raises(DuplicateIndex):
        biorthogonalize_permuted(D, (1, 1), (0, 1))


def test_nongeneric_attribution():
    with pytest.raises(NonGeneric) as info:
        biorthogonalize(Matrix([[F(0), F(1)], [F(1), F(0)]]), 1)
    assert info.value.order == 0
    with pytest.raises(NonGeneric) as info:
        biorthogonalize(Matrix([[F(1), F(1), F(0)], [F(1), F(1), F(0)], [F(0), F(0), F(1)]]), 2)
    assert info.value.order == 1


@pytest.mark.parametrize("ring", RINGS)
def test_triangular_characterization(ring):
    for D, n in _instances(ring, seed=1):
        res = biorthogonalize(D, n)
        Dn = D.leading(n)
        assert (Dn @ res.A).is_lower_unitriangular()
        assert (res.C @ Dn).is_upper_unitriangular()
        for m in range(n + 1):
            assert res.A[m, m] == inverse(res.pivots[m]) == res.C[m, m]
            for j in range(m + 1, n + 1):
                assert res.A[j, m] == 0 and res.C[m, j] == 0


@pytest.mark.parametrize("ring", RINGS)
def test_factorization(ring):
    for D, n in _instances(ring, seed=2):
        res = biorthogonalize(D, n)
        assert res.A @ res.factor_B() @ res.C == invert(D.leading(n))


@pytest.mark.parametrize("ring", RINGS)
def test_biorthogonality(ring):
    for D, n in _instances(ring, seed=3):
        res = biorthogonalize(D, n)
        pairing = res.C @ D.leading(n) @ res.A  # (w^m, q_m')
        for m in range(n + 1):
            for mm in range(n + 1):
                if m == mm:
                    assert pairing[m, m] == inverse(res.pivots[m])
                else:
                    assert pairing[m, mm] == 0


@pytest.mark.parametrize("ring", RINGS)
def test_pivots_are_corner_quasidets(ring):
    for D, n in _instances(ring, count=6, seed=4):
        res = biorthogonalize(D, n, verify=False)
        for m in range(n + 1):
            assert res.pivots[m] == quasidet(D.leading(m), m, m)


@pytest.mark.parametrize("ring", RINGS)
def test_uniqueness_against_dense_solve(ring):
    for D, n in _instances(ring, count=8, max_n=4, seed=5):
        res = biorthogonalize(D, n)
        A, C = dense_biortho(D, n)
        assert res.A == A
        assert res.C == C
