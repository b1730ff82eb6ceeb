"""q-combinatorial number kernels.

q-integers, q-factorials, q-binomials, three q-deformations of the
Stirling numbers of the second kind, two auxiliary Stirling-type arrays
with a q parameter, the q-exponential series, and a q-analogue of the
Eulerian numbers.

The three Stirling deformations, by recurrence:

* carlitz   {n,m} = {n-1,m-1} + [m]*{n-1,m}; tracks the partition
            inversion statistic Inv*.
* cigler    weights each partition of {0,...,n-1} by q**(sum of the
            elements sharing a block with 0).
* shifted   S(n+1,k) = q**(k-1)*S(n,k-1) + [k]*S(n,k); equals
            q**C(k,2) times the carlitz value.

All kernels return canonical QPoly/QRational values and are memoized; the
caches only grow and never change an entry, so concurrent readers are safe.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import NotPolynomialError
from .exactnum import QPoly, QRational, TruncatedSeries

__all__ = [
    "STIRLING_VARIANTS",
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_stirling",
    "stirling2",
    "s2_q",
    "s2_inv_q",
    "q_exponential",
    "q_eulerian",
]

STIRLING_VARIANTS = ("carlitz", "cigler", "shifted")

_q_factorials: list[QPoly] = [QPoly.one()]
_stirling_tables: dict[str, list[list[QPoly]]] = {v: [[QPoly.one()]] for v in STIRLING_VARIANTS}
_classical_rows: list[list[int]] = [[1]]


def q_int(n: int) -> QPoly:
    """[n] = 1 + q + ... + q**(n-1)."""
    if n < 0:
        raise ValueError(f"q_int needs n >= 0, got {n}")
    return QPoly([1] * n)


def q_factorial(n: int) -> QPoly:
    """[n]! = [1][2]...[n]."""
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    while len(_q_factorials) <= n:
        k = len(_q_factorials)
        _q_factorials.append(_q_factorials[k - 1] * q_int(k))
    return _q_factorials[n]


def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial [n]! / ([k]! [n-k]!), computed by exact division."""
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got ({n}, {k})")
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k))


def _grow_carlitz(rows: list[list[QPoly]]) -> None:
    n = len(rows)
    prev = rows[-1]
    row = [QPoly.zero()] * (n + 1)
    for m in range(1, n + 1):
        above = prev[m] if m < len(prev) else QPoly.zero()
        row[m] = prev[m - 1] + q_int(m) * above
    rows.append(row)


def _grow_cigler(rows: list[list[QPoly]]) -> None:
    n = len(rows)
    prev = rows[-1]
    row = [QPoly.zero()] * (n + 1)
    if n == 1:
        row[1] = QPoly.one()
    else:
        # Element n-1 joins the 0-block (weight q**(n-1)), joins one of the
        # k-1 other blocks, or opens a fresh non-0 block.
        wt = QPoly.q(n - 1)
        for k in range(1, n + 1):
            stay = prev[k] if k < len(prev) else QPoly.zero()
            row[k] = wt * stay + (k - 1) * stay + prev[k - 1]
    rows.append(row)


def _grow_shifted(rows: list[list[QPoly]]) -> None:
    n = len(rows)
    prev = rows[-1]
    row = [QPoly.zero()] * (n + 1)
    for k in range(1, n + 1):
        above = prev[k] if k < len(prev) else QPoly.zero()
        row[k] = QPoly.q(k - 1) * prev[k - 1] + q_int(k) * above
    rows.append(row)


_GROWERS = {"carlitz": _grow_carlitz, "cigler": _grow_cigler, "shifted": _grow_shifted}


def q_stirling(variant: str, n: int, m: int) -> QPoly:
    """q-Stirling number of the second kind in the given variant.

    Out-of-triangle indices return 0.
    """
    if variant not in STIRLING_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {STIRLING_VARIANTS}")
    if n < 0 or m < 0:
        raise ValueError("q_stirling needs n, m >= 0")
    if m > n:
        return QPoly.zero()
    rows = _stirling_tables[variant]
    grow = _GROWERS[variant]
    while len(rows) <= n:
        grow(rows)
    return rows[n][m]


def stirling2(n: int, k: int) -> int:
    """Classical Stirling number of the second kind."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 needs n, k >= 0")
    if k > n:
        return 0
    while len(_classical_rows) <= n:
        i = len(_classical_rows)
        prev = _classical_rows[-1]
        row = [0] * (i + 1)
        for m in range(1, i + 1):
            row[m] = prev[m - 1] + m * (prev[m] if m < len(prev) else 0)
        _classical_rows.append(row)
    return _classical_rows[n][k]


def s2_q(n: int, j: int) -> QPoly:
    """Binomial transform of classical Stirling numbers with a q weight:
    sum over k of C(n,k) * q**(n-k) * stirling2(k, j).
    """
    if n < 0 or j < 0:
        raise ValueError("s2_q needs n, j >= 0")
    terms = QPoly.zero()
    for k in range(j, n + 1):
        s = stirling2(k, j)
        if s:
            terms = terms + QPoly.q(n - k) * (comb(n, k) * s)
    return terms


def s2_inv_q(n: int, j: int) -> QRational:
    """Coefficient array of the egf (q**-1 * e**t - 1)**j * q**-1 * e**t / j!.

    Closed form (1/j!) * sum over l of C(j,l) * (-1)**(j-l) * q**-(l+1)
    * (l+1)**n, applied verbatim for every integer n; for n < 0 the power
    (l+1)**n is an exact rational.
    """
    if j < 0:
        raise ValueError("s2_inv_q needs j >= 0")
    acc = QRational.from_int(0)
    for l in range(j + 1):
        scale = Fraction(comb(j, l) * (-1) ** (j - l), factorial(j)) * Fraction(l + 1) ** n
        acc = acc + QRational(QPoly.q(-(l + 1))) * scale
    return acc


def q_exponential(scale: QPoly, order: int) -> TruncatedSeries:
    """E_q(z * scale) truncated at the given order.

    The coefficient of z**k is scale**k / [k]! as a QRational.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = []
    power = QPoly.one()
    for k in range(order + 1):
        coeffs.append(QRational(power, q_factorial(k)))
        power = power * scale
    return TruncatedSeries(coeffs)


def q_eulerian(n: int, k: int) -> QPoly:
    """q-Eulerian polynomial of rectangular permutation tableaux.

    Specializes to Eulerian numbers at q=1, Narayana numbers at q=0, and
    binomial coefficients at q=-1.  The defining sum is Laurent; the result
    is asserted to be an honest polynomial.
    """
    if not 0 <= k <= n:
        raise ValueError(f"q_eulerian needs 0 <= k <= n, got ({n}, {k})")
    acc = QPoly.zero()
    for i in range(k):
        binom_part = QPoly.q(k - i) * comb(n, i)
        if i >= 1:
            binom_part = binom_part + comb(n, i - 1)
        term = (q_int(k - i) ** n) * binom_part.shift(k * i - k)
        acc = acc + (term if i % 2 == 0 else -term)
    acc = acc.shift(k - k * k)
    if acc.min_exp < 0:
        raise NotPolynomialError(f"q_eulerian({n}, {k}) produced exponent {acc.min_exp}")
    return acc
