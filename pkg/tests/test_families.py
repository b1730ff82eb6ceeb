"""Family-level tests: reference values, symmetries, collapses, triangles."""

from fractions import Fraction
from math import comb, factorial

import pytest

from qpb import families as F
from qpb.exactnum import QPoly, QRational
from qpb.qkernels import q_factorial, q_stirling, stirling2

NEGK_TABLE = (
    (1, 1, 1, 1, 1, 1),
    (1, 2, 4, 8, 16, 32),
    (1, 4, 14, 46, 146, 454),
    (1, 8, 46, 230, 1066, 4718),
    (1, 16, 146, 1066, 6902, 41506),
    (1, 32, 454, 4718, 41506, 329462),
)


def test_value_table():
    for k in range(6):
        for n in range(6):
            assert F.classical_pb_negk(n, k) == NEGK_TABLE[k][n]


def test_classical_pb_selected():
    assert F.classical_pb(2, -2) == 14
    assert F.classical_pb(5, -5) == 329462
    for n in range(6):
        assert F.classical_pb(n, 0) == 1


def test_classical_pb_positive_k_are_signed_bernoulli():
    # independent row-rewriting oracle for the Bernoulli numbers
    def bernoulli(n):
        row = [Fraction(1, m + 1) for m in range(n + 1)]
        for _ in range(n):
            row = [(m + 1) * (row[m] - row[m + 1]) for m in range(len(row) - 1)]
        return row[0]

    for n in range(9):
        assert F.classical_pb(n, 1) == bernoulli(n)


def test_two_explicit_formulas_agree():
    for n in range(9):
        for k in range(9):
            assert F.classical_pb(n, -k) == F.classical_pb_negk(n, k)


def test_negk_symmetry():
    for n in range(7):
        for k in range(7):
            assert F.classical_pb_negk(n, k) == F.classical_pb_negk(k, n)


def test_step_down_recursion():
    # 230 = 46 + 3*46 + 3*14 + 1*4
    assert F.pb_recursion_check(3, 2)
    for k in range(5):
        assert F.pb_recursion_check(0, k)
    assert F.pb_recursion_check(5, 4)


def test_c_relative_values():
    for n in range(6):
        assert F.c_relative(n, 0) == 1
    for k in range(1, 6):
        assert F.c_relative(0, k) == 0
    assert F.c_relative(2, 2) == 7


def test_ordered_q_reference_and_edges():
    assert F.ordered_q_pb(3, 1) == QPoly([4, 3, 1])
    for n in range(5):
        assert F.ordered_q_pb(n, 0) == QPoly.one()
    assert F.ordered_q_pb(2, 2).at_one() == 14


def test_ordered_q_symmetry():
    for n in range(7):
        for k in range(7):
            assert F.ordered_q_pb(n, k) == F.ordered_q_pb(k, n)


def test_q_fubini_reference_values():
    assert F.q_fubini(0) == QPoly.one()
    assert F.q_fubini(1) == QPoly.one()
    assert F.q_fubini(2) == QPoly([2, 1])
    assert F.q_fubini(3) == QPoly([4, 5, 3, 1])
    assert F.q_fubini(4) == QPoly([8, 17, 20, 16, 9, 4, 1])


def test_q_fubini_collapses_to_ordered_bell():
    for n in range(9):
        classical = sum(factorial(k) * stirling2(n, k) for k in range(n + 1)) if n else 1
        assert F.q_fubini(n).at_one() == classical


def test_q_fubini_block_recurrence_route():
    # third route: T(n,k) = [k] * (T(n-1,k-1) + T(n-1,k)) with T(0,0) = 1,
    # the growth step of ordered partitions by their largest element
    from qpb.qkernels import q_int

    table = {(0, 0): QPoly.one()}
    for n in range(1, 8):
        for k in range(n + 1):
            left = table.get((n - 1, k - 1), QPoly.zero())
            same = table.get((n - 1, k), QPoly.zero())
            table[(n, k)] = q_int(k) * (left + same)
    for n in range(8):
        total = QPoly.zero()
        for k in range(n + 1):
            entry = table[(n, k)]
            assert entry == q_factorial(k) * q_stirling("carlitz", n, k)
            total = total + entry
        assert total == F.q_fubini(n)


def test_lonesum_q_at_one_and_small_shapes():
    for n in range(6):
        for k in range(6):
            assert F.lonesum_q_pb(n, k).at_one() == F.classical_pb_negk(n, k)
    # single column of zeros dominates the k = 0 case
    for n in range(5):
        assert F.lonesum_q_pb(n, 0) == QPoly.q(n * (n + 1) // 2)
    # hand-checked 1x1 and 2x1 weight polynomials
    assert F.lonesum_q_pb(1, 1) == QPoly.from_terms({0: 1, 2: 1})
    assert F.lonesum_q_pb(2, 1) == QPoly.from_terms({0: 1, 1: 1, 2: 1, 4: 1})


def test_vesztergombi_reference_values():
    assert F.vesztergombi_q_pb(2, 2) == QPoly([1, 3, 5, 4, 1])
    assert F.vesztergombi_q_pb(3, 2) == QPoly([1, 4, 9, 13, 12, 6, 1])
    one_plus_q = QPoly([1, 1])
    for n in range(7):
        assert F.vesztergombi_q_pb(n, 1) == one_plus_q ** n
        assert F.vesztergombi_q_pb(1, n) == one_plus_q ** n
        assert F.vesztergombi_q_pb(n, 0) == QPoly.one()


def test_vesztergombi_structure():
    for n in range(6):
        for k in range(6):
            p = F.vesztergombi_q_pb(n, k)
            assert p == F.vesztergombi_q_pb(k, n)
            assert p.min_exp >= 0
            assert p.max_exp == n * k or (n * k == 0 and p == QPoly.one())
            assert all(c > 0 for _, c in p.terms())
            assert p.at_one() == F.classical_pb_negk(n, k)


def test_cenkci_reference_and_collapse():
    assert F.cenkci_q_pb(2, -1) == QPoly([6, -2])
    for k in range(-3, 4):
        assert F.cenkci_q_pb(0, k) == (QPoly.one() if k <= 0 else QRational.from_int(1))
    for n in range(6):
        for k in range(-5, 6):
            v = F.cenkci_q_pb(n, k)
            assert v.eval_rational(1) == F.classical_pb(n, k)


def test_cenkci_recursion():
    assert F.cenkci_recursion_check(2, -2)
    assert F.cenkci_recursion_check(4, -3)
    # n = 1 reduces to a doubling between adjacent columns
    for k in range(-4, 5):
        assert F.cenkci_recursion_check(1, k)
    for n in range(1, 7):
        for k in range(-4, 1):
            assert F.cenkci_recursion_check(n, k)


def test_cenkci_comb_report_matrix():
    # agreement data under the documented extension: the n = 0 column only
    results = {(n, k): F.cenkci_comb_check(n, k) for n in range(5) for k in range(5)}
    assert results[(0, 0)] is True
    for (n, k), agrees in results.items():
        assert agrees == (n == 0)


def test_at_q_values():
    for k in range(-3, 4):
        v = F.at_q_pb(0, k)
        assert v == (QPoly.one() if k <= 0 else QRational.from_int(1))
    assert F.at_q_pb(1, -1) == QPoly([1, 1])
    assert F.at_q_pb(1, -1).at_one() == 2
    for n in range(7):
        for k in range(-4, 5):
            assert F.at_q_pb(n, k).eval_rational(1) == F.classical_pb(n, k)


def test_triangle_classical_rows():
    tri = F.akiyama_tanigawa("classical", F.harmonic_initial(), n_rows=3, row_len=5)
    assert [c.as_fraction() for c in tri.rows[1][:3]] == [
        Fraction(1, 2), Fraction(1, 3), Fraction(1, 4),
    ]
    assert [c.as_fraction() for c in tri.rows[2][:3]] == [
        Fraction(1, 6), Fraction(1, 6), Fraction(3, 20),
    ]


def test_triangle_row_too_short():
    with pytest.raises(ValueError):
        F.akiyama_tanigawa("classical", F.harmonic_initial(), n_rows=4, row_len=3)
    with pytest.raises(ValueError):
        F.akiyama_tanigawa("nope", F.harmonic_initial(), n_rows=2, row_len=3)


def test_triangle_classical_gives_bernoulli_numbers():
    # leading column from the harmonic row is the Bernoulli sequence in the
    # B_1 = +1/2 convention, which is the k = 1 member of the signed family
    tri = F.akiyama_tanigawa("classical", F.harmonic_initial(), n_rows=9, row_len=10)
    for n in range(9):
        assert tri.leading_column()[n].as_fraction() == F.classical_pb(n, 1)


def test_zeng_closed_forms_generic_initial():
    width = 8
    generic = [Fraction(3 * m + 2, m * m + 1) for m in range(width)]
    tri_a = F.akiyama_tanigawa("zengA", generic, n_rows=7, row_len=width)
    tri_b = F.akiyama_tanigawa("zengB", generic, n_rows=7, row_len=width)
    for n in range(7):
        want_a = QRational.from_int(0)
        want_b = QRational.from_int(0)
        for m in range(n + 1):
            sign = -1 if m % 2 else 1
            coeff = QRational.from_fraction(generic[m]) * sign
            want_a = want_a + coeff * (q_factorial(m) * q_stirling("carlitz", n + 1, m + 1))
            want_b = want_b + coeff * (q_factorial(m) * q_stirling("carlitz", n, m))
        assert tri_a.leading_column()[n] == want_a
        assert tri_b.leading_column()[n] == want_b


def test_zeng_b_bridge_to_at_q():
    # leading column from initial [m+1]^k carries the sign (-1)^n relative
    # to the explicit formula with flipped exponent
    for k in range(-3, 4):
        tri = F.akiyama_tanigawa("zengB", F.q_power_initial(k), n_rows=6, row_len=6)
        lead = tri.leading_column()
        for n in range(6):
            v = F.at_q_pb(n, -k)
            target = v if isinstance(v, QRational) else QRational.from_qpoly(v)
            got = lead[n] if n % 2 == 0 else -lead[n]
            assert got == target


def test_carlitz_beta():
    beta2 = F.carlitz_beta(2)
    assert beta2 == QRational(QPoly.q(1), QPoly([1, 1]) * QPoly([1, 1, 1]))
    assert beta2.eval_rational(1) == Fraction(1, 6)
    assert F.carlitz_beta(0) == QRational.from_int(1)
    assert F.carlitz_beta(1) == QRational(QPoly.q(1), QPoly([1, 1]))
    for n in range(2, 7):
        tri = F.akiyama_tanigawa("zengA", F.q_harmonic_initial(), n_rows=n + 1, row_len=n + 1)
        assert F.carlitz_beta(n) == tri.leading_column()[n]


def test_permmatrix_family_collapse():
    for n in range(4):
        for k in range(4):
            assert F.permmatrix_q_pb(n, k).at_one() == F.c_relative(n, k)


def test_family_registry_covers_everything():
    assert set(F.FAMILIES) == {
        "classical_negk", "classical_anyk", "c_relative", "ordered_q",
        "lonesum_q", "vesztergombi_q", "permmatrix_q", "cenkci_q", "at_q",
    }
    spec = F.FAMILIES["vesztergombi_q"]
    assert spec.fn(2, 2) == QPoly([1, 3, 5, 4, 1])
