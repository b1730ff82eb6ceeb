"""q-kernel tests, each derived value frozen from an independent oracle."""

from fractions import Fraction
from math import comb, factorial

import pytest

from qpb.exactnum import QPoly, QRational, TruncatedSeries
from qpb.objects import gen_set_partitions, inv_star
from qpb.qkernels import (
    q_binomial,
    q_eulerian,
    q_exponential,
    q_factorial,
    q_int,
    q_stirling,
    s2_inv_q,
    s2_q,
    stirling2,
)


def test_q_int_and_factorial_basics():
    assert q_int(0) == QPoly.zero()
    assert q_int(3) == QPoly([1, 1, 1])
    assert q_factorial(0) == QPoly.one()
    assert q_factorial(3) == QPoly([1, 1]) * QPoly([1, 1, 1])
    with pytest.raises(ValueError):
        q_int(-1)


def test_q_binomial_frozen_value():
    assert q_binomial(4, 2) == QPoly([1, 1, 2, 1, 1])
    with pytest.raises(ValueError):
        q_binomial(3, 4)


def test_q_binomial_against_pascal_recurrence():
    # independent oracle: [n k] = [n-1 k-1] + q^k [n-1 k]
    table = {(0, 0): QPoly.one()}
    for n in range(1, 9):
        for k in range(n + 1):
            left = table.get((n - 1, k - 1), QPoly.zero())
            right = table.get((n - 1, k), QPoly.zero())
            table[(n, k)] = left + QPoly.q(k) * right
    for n in range(9):
        for k in range(n + 1):
            assert q_binomial(n, k) == table[(n, k)]


def _carlitz_oracle(n, m):
    counts = {}
    for part in gen_set_partitions(list(range(1, n + 1))):
        if len(part) == m:
            w = inv_star(part)
            counts[w] = counts.get(w, 0) + 1
    return QPoly.from_terms(counts)


def _cigler_oracle(n, m):
    counts = {}
    for part in gen_set_partitions(list(range(n))):
        if len(part) == m:
            zero_block = next((b for b in part if 0 in b), ())
            w = sum(zero_block)
            counts[w] = counts.get(w, 0) + 1
    return QPoly.from_terms(counts)


def test_carlitz_frozen_example():
    assert q_stirling("carlitz", 3, 2) == QPoly([2, 1])


def test_cigler_frozen_example():
    assert q_stirling("cigler", 3, 2) == QPoly([1, 1, 1])


def test_shifted_frozen_example():
    assert q_stirling("shifted", 2, 2) == QPoly.q(1)


def test_carlitz_matches_partition_inversions():
    for n in range(8):
        for m in range(n + 2):
            assert q_stirling("carlitz", n, m) == _carlitz_oracle(n, m)


def test_cigler_matches_zero_block_weight():
    for n in range(8):
        for m in range(n + 2):
            assert q_stirling("cigler", n, m) == _cigler_oracle(n, m)


def test_shifted_is_graded_carlitz():
    for n in range(9):
        for k in range(n + 1):
            assert q_stirling("shifted", n, k) == QPoly.q(comb(k, 2)) * q_stirling("carlitz", n, k)


def test_all_variants_collapse_to_classical():
    for variant in ("carlitz", "cigler", "shifted"):
        for n in range(11):
            for m in range(n + 1):
                assert q_stirling(variant, n, m).at_one() == stirling2(n, m)


def test_out_of_triangle_is_zero():
    assert q_stirling("carlitz", 2, 5) == QPoly.zero()
    with pytest.raises(ValueError):
        q_stirling("carlitz", -1, 0)
    with pytest.raises(ValueError):
        q_stirling("weird", 2, 1)


def test_s2_q_values():
    assert s2_q(2, 1) == QPoly([1, 2])
    for n in range(7):
        assert s2_q(n, n) == QPoly.one()
        for j in range(n + 1):
            assert s2_q(n, j).eval_rational(0) == stirling2(n, j)


def test_s2_inv_q_base_case():
    assert s2_inv_q(0, 0) == QRational(QPoly.q(-1))


def test_s2_inv_q_collapses_to_classical_at_one():
    for j in range(4):
        for n in range(j, 8):
            assert s2_inv_q(n, j).eval_rational(1) == stirling2(n + 1, j + 1)


def test_s2_inv_q_matches_generating_function():
    # oracle: expand (u*e^t - 1)^j * u*e^t / j! symbolically with u = q^-1
    order = 6
    u = QRational(QPoly.q(-1))
    one = QRational.from_int(1)
    zero = QRational.from_int(0)
    exp_t = TruncatedSeries(
        [QRational.from_fraction(Fraction(1, factorial(i))) for i in range(order + 1)]
    )
    for j in range(4):
        base = exp_t * u - TruncatedSeries([one] + [zero] * order)
        prod = TruncatedSeries([one] + [zero] * order)
        for _ in range(j):
            prod = prod * base
        egf = prod * exp_t * (u * Fraction(1, factorial(j)))
        for n in range(order + 1):
            assert egf.coefficient(n) * factorial(n) == s2_inv_q(n, j)


def test_q_exponential_coefficients():
    e = q_exponential(QPoly.one(), 4)
    assert e.coefficient(0) == QRational.from_int(1)
    assert e.coefficient(2) == QRational(QPoly.one(), QPoly([1, 1]))
    for k in range(5):
        assert e.coefficient(k).eval_rational(1) == Fraction(1, factorial(k))
    zero_arg = q_exponential(QPoly.zero(), 3)
    assert zero_arg.coefficient(0) == QRational.from_int(1)
    assert all(zero_arg.coefficient(k).is_zero for k in range(1, 4))


def _eulerian_table(n_max):
    # classical recurrence: E(n, j) = (j+1) E(n-1, j) + (n-j) E(n-1, j-1)
    table = {(0, 0): 1}
    for n in range(1, n_max + 1):
        for j in range(n):
            table[(n, j)] = (j + 1) * table.get((n - 1, j), 0) + (n - j) * table.get((n - 1, j - 1), 0)
    return table


def test_q_eulerian_specializations():
    eulerian = _eulerian_table(8)
    for n in range(1, 9):
        for k in range(1, n + 1):
            poly = q_eulerian(n, k)
            assert poly.min_exp >= 0
            assert poly.at_one() == eulerian.get((n, k - 1), 0)
            # Narayana numbers C(n,k) C(n,k-1) / n at q = 0
            assert poly.eval_rational(0) == Fraction(comb(n, k) * comb(n, k - 1), n)
            assert poly.eval_rational(-1) == comb(n - 1, k - 1)


def test_q_eulerian_edges():
    assert q_eulerian(3, 0) == QPoly.zero()
    with pytest.raises(ValueError):
        q_eulerian(2, 3)


def test_ernst_polynomial_identity():
    # sum_i [m i] (-1)^i q^C(i,2) [m-i]^n == [m]! q^C(m,2) {n,m}_q
    for m in range(5):
        for n in range(9):
            lhs = QPoly.zero()
            for i in range(m + 1):
                term = q_binomial(m, i) * QPoly.q(comb(i, 2)) * (q_int(m - i) ** n)
                lhs = lhs + (term if i % 2 == 0 else -term)
            rhs = q_factorial(m) * QPoly.q(comb(m, 2)) * q_stirling("carlitz", n, m)
            assert lhs == rhs
