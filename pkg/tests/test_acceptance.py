"""Exit criteria. Every check is exact equality of rationals (zero tolerance).

Run with ``pytest tests/test_acceptance.py -v``; each criterion prints one
``[PASS]`` / ``[FAIL]`` line.
"""

import io
import json
import random
import time
from fractions import Fraction as F
from math import factorial
from pathlib import Path

import pytest

from ncnewton.applications import (
    GramData,
    confluent_limit_check,
    divided_difference,
    gram_schmidt,
    lagrange_solve,
    newton_interpolate,
    taylor_interpolate,
    taylor_matrix,
    taylor_polynomial,
    vandermonde,
)
from ncnewton.biortho import biorthogonalize
from ncnewton.cli import main
from ncnewton.diffcalc import ALGORITHMS, delta_left, delta_right, inverse_via_theorem6, newton_expand, pairing_truncated
from ncnewton.errors import NonGeneric
from ncnewton.matrix import invert
from ncnewton.polynomial import X, Polynomial
from ncnewton.sampling import CorpusConfig, generic_corpus, random_instance, random_nodes, random_polynomial, random_spd

from oracles import h_bruteforce

GOLDEN = Path(__file__).parent / "golden"
BLOCK2 = ("block", 2)


@pytest.fixture(scope="module")
def corpus():
    return generic_corpus(CorpusConfig())


@pytest.fixture
def criterion(report):
    def _run(number, title, check):
        try:
            detail = check()
        except Exception as exc:
            report(f"[FAIL] criterion {number:2d}: {title} -- {type(exc).__name__}: {exc}")
            raise
        report(f"[PASS] criterion {number:2d}: {title}" + (f" ({detail})" if detail else ""))

    return _run


def test_c01_theorem6_inverse(corpus, criterion):
    def check():
        assert len(corpus) == 200
        assert {i.ring for i in corpus} == {"rational", "block2"}
        start = time.perf_counter()
        for inst in corpus:
            assert inverse_via_theorem6(inst.D, inst.n) == invert(inst.D.leading(inst.n))
        elapsed = time.perf_counter() - start
        assert elapsed < 60, f"took {elapsed:.1f}s"
        return f"200 matrices, {elapsed:.2f}s"

    criterion(1, "inverse-matrix sum equals elimination inverse", check)


def test_c02_newton_expansion_identity(corpus, criterion):
    def check():
        for inst in corpus:
            total = newton_expand(inst.f, inst.g, inst.D, inst.n).total()
            assert total == pairing_truncated(inst.f, inst.g, inst.D, inst.n)
            assert total == pairing_truncated(inst.f, inst.g, inst.D, inst.n, method="elimination")
        return "200 instances"

    criterion(2, "generalized Newton sum equals truncated pairing", check)


def test_c03_triangular_factorization(corpus, criterion):
    def check():
        for inst in corpus:
            res = biorthogonalize(inst.D, inst.n)
            Dn = inst.D.leading(inst.n)
            assert (Dn @ res.A).is_lower_unitriangular()
            assert (res.C @ Dn).is_upper_unitriangular()
            assert res.A @ res.factor_B() @ res.C == invert(Dn)
        return "200 instances"

    criterion(3, "D A lower-unitriangular, C D upper-unitriangular, D^-1 = A diag(pivots) C", check)


def test_c04_three_way_agreement(criterion):
    def check():
        rng = random.Random(404)
        counts = {}
        for ring in ("rational", BLOCK2):
            for m in range(6):
                for side, fn in (("right", delta_right), ("left", delta_left)):
                    agreed = 0
                    while agreed < 5:
                        inst = random_instance(rng, m + rng.randint(0, 1), ring, nonzero=True)
                        data = inst.f if side == "right" else inst.g
                        cols = rng.sample(range(inst.n + 1), m + 1)
                        rows = rng.sample(range(inst.n + 1), m + 1)
                        try:
                            values = [fn(data, inst.D, cols, rows, alg) for alg in ALGORITHMS]
                        except NonGeneric:
                            continue
                        assert values[0] == values[1] == values[2], (ring, m, side)
                        agreed += 1
                    counts[(str(ring), side)] = counts.get((str(ring), side), 0) + agreed
        return f"{sum(counts.values())} agreements over m = 0..5, both rings, both sides"

    criterion(4, "recurrence = quasideterminant = biorthogonal pairing", check)


def _perm_check(fn, data, D, reference, perms, want=20):
    ok = 0
    for cols, rows in perms:
        try:
            value = fn(data, D, cols, rows)
        except NonGeneric:
            continue
        assert value == reference
        ok += 1
        if ok == want:
            break
    assert ok == want, f"only {ok} generic permutations"
    return ok


def test_c05_symmetry(criterion):
    def check():
        rng = random.Random(505)
        total = 0
        for ring in ("rational", BLOCK2):
            for n in (1, 2, 3, 4, 5):
                inst = random_instance(rng, n, ring, nonzero=True)
                idx = list(range(n + 1))
                right = delta_right(inst.f, inst.D, idx, idx)
                left = delta_left(inst.g, inst.D, idx, idx)
                rp = ((rng.sample(idx, n + 1), rng.sample(idx[:n], n) + [n]) for _ in range(500))
                lp = ((rng.sample(idx[:n], n) + [n], rng.sample(idx, n + 1)) for _ in range(500))
                total += _perm_check(delta_right, inst.f, inst.D, right, rp)
                total += _perm_check(delta_left, inst.g, inst.D, left, lp)
        return f"{total} permuted evaluations, 20 per instance and side"

    criterion(5, "right/left differences symmetric under the stated index permutations", check)


def test_c06_newton_recovery(criterion):
    def check():
        rng = random.Random(606)
        for t in range(100):
            n = t % 9
            nodes = random_nodes(rng, n + 1)
            values = [F(rng.randint(-9, 9), rng.choice([1, 2, 3, 5, 7])) for _ in range(n + 1)]
            exp, poly = newton_interpolate(nodes, values, n)
            assert poly == lagrange_solve(nodes, values)
            for m, term in enumerate(exp.terms):
                pivot = F(1)
                for j in range(m):
                    pivot *= nodes[m] - nodes[j]
                assert term.pivot == pivot
                assert term.delta_left == Polynomial.from_roots(nodes[:m]) / pivot
                assert term.pivot * term.delta_left == Polynomial.from_roots(nodes[:m])
                assert term.delta_right == divided_difference(values[: m + 1], nodes[: m + 1])
        return "100 node/value sets, n <= 8"

    criterion(6, "Newton interpolation recovered; pivot and basis-polynomial identities", check)


def test_c07_taylor_recovery(criterion):
    def check():
        rng = random.Random(707)
        for t in range(60):
            deg = t % 9
            f = random_polynomial(rng, deg)
            x0 = F(rng.randint(-9, 9), rng.randint(1, 9))
            n = rng.randint(0, 8)
            derivs = f.derivatives_at(x0, n + 1)
            exp, S = taylor_interpolate(x0, derivs, n)
            for m, term in enumerate(exp.terms):
                assert term.delta_right == derivs[m] / factorial(m)
                assert term.pivot == factorial(m)
                assert term.delta_left == Polynomial([-x0, 1]) ** m / factorial(m)
            assert S == taylor_polynomial(f, x0, n)
            assert biorthogonalize(taylor_matrix(x0, n), n).pivots == tuple(factorial(m) for m in range(n + 1))
            if n >= deg:
                assert S == f
        return "60 random polynomials, deg <= 8"

    criterion(7, "Taylor formula recovered: differences, pivots m!, (x-x0)^m/m!", check)


def test_c08_confluent_limit(criterion):
    def check():
        eps_values = [F(1, 2 ** j) for j in range(1, 7)]
        cases = 0
        # nodes to the right of a nonnegative x0: every error coefficient has one sign,
        # so halving eps at least halves the error
        for x0 in (F(0), F(1, 3), F(1), F(5, 2)):
            for d in range(7):
                for m in range(d + 1):
                    errs = [abs(a - b) for a, b in (confluent_limit_check(X ** d, x0, m, e) for e in eps_values)]
                    for big, small in zip(errs, errs[1:]):
                        assert 2 * small <= big, (x0, d, m, errs)
                    cases += 1
        # negative x0: mixed-sign error terms, so only the leading-order rate is checked:
        # the last halving ratio is within 1/8 of 1/2
        for x0 in (F(-1, 3), F(-1), F(-2)):
            for d in range(7):
                for m in range(d + 1):
                    errs = [abs(a - b) for a, b in (confluent_limit_check(X ** d, x0, m, e) for e in eps_values)]
                    if errs[0] == 0:
                        assert all(e == 0 for e in errs)
                        continue
                    assert abs(errs[-1] / errs[-2] - F(1, 2)) <= F(1, 8), (x0, d, m, errs)
                    cases += 1
        return f"{cases} (x0, d, m) cases over eps = 1/2 .. 1/64"

    criterion(8, "divided differences approach f^(m)(x0)/m! at least linearly", check)


def test_c09_gram_schmidt(criterion):
    def check():
        rng = random.Random(909)
        for t in range(50):
            size = 1 + t % 7
            G = random_spd(rng, size)
            n = size - 1
            res = gram_schmidt(GramData(G), n)
            W = res.C @ G @ res.C.transpose()
            assert W.is_diagonal()
            f = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(size)]
            g = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(size)]
            fw = [sum((res.C[m, k] * f[k] for k in range(size)), F(0)) for m in range(size)]
            gw = [sum((res.C[m, k] * g[k] for k in range(size)), F(0)) for m in range(size)]
            total = sum((fw[m] / W[m, m] * gw[m] for m in range(size)), F(0))
            assert total == pairing_truncated(f, g, G, n)
        return "50 SPD Gram matrices, n <= 6"

    criterion(9, "Gram-Schmidt: C G C^T diagonal, orthogonal expansion equals pairing", check)


def test_c10_schur_remark(criterion):
    def check():
        rng = random.Random(1010)
        count = 0
        for m in range(5):
            for _ in range(4):
                nodes = random_nodes(rng, m + 5)
                for k in range(m, m + 5):
                    V = vandermonde(nodes, k)
                    got = delta_right(list(V.row(k)), V, range(m + 1), range(m + 1))
                    assert got == h_bruteforce(k - m, nodes[: m + 1])
                    count += 1
        return f"{count} (m, k, nodes) cases"

    criterion(10, "difference of the k-th Vandermonde row is h_(k-m) of the nodes", check)


def test_c11_cli_conformance(criterion):
    def check():
        cases = sorted(p for p in GOLDEN.iterdir() if p.is_dir())
        assert len(cases) >= 12
        commands, codes = set(), set()
        for case in cases:
            args = json.loads((case / "args.json").read_text())
            text = (case / "input.json").read_text()
            for _ in range(2):
                out, err = io.StringIO(), io.StringIO()
                status = main(args, stdin=io.StringIO(text), stdout=out, stderr=err)
                assert status == int((case / "exit_code").read_text()), case.name
                assert out.getvalue() == (case / "stdout").read_text(), case.name
                assert err.getvalue() == (case / "stderr").read_text(), case.name
            commands.add(args[0])
            codes.add(status)
        assert commands == {"invert", "biortho", "diffderiv", "newton", "taylor", "gram"}
        assert codes == {0, 2, 3, 4}
        return f"{len(cases)} golden jobs, byte-stable"

    criterion(11, "CLI golden corpus", check)
