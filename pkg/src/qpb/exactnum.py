"""Exact arithmetic kernels.

Four carriers, all immutable and exact (no floats anywhere):

* ``QPoly``           Laurent polynomial in q with big-integer coefficients.
* ``QRational``       normalized ratio of two QPoly.
* ``TruncatedSeries`` power series in one formal variable, truncated at a
                      fixed order, coefficients in any exact coefficient
                      ring (Fraction or QRational in practice).
* ``IntMatrix``       dense big-integer matrix with exact determinant,
                      characteristic polynomial (Berkowitz, division free),
                      and permanent (Ryser with Gray-code subsets).

Values are safe to share between threads: every operation returns a new
object and never mutates its inputs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import NonSquareError, PoleError, SeriesDivisionError, SizeLimitError

__all__ = ["QPoly", "QRational", "TruncatedSeries", "IntMatrix"]


class QPoly:
    """Laurent polynomial in q over the integers.

    Canonical form: ``coeffs`` is a dense tuple starting at exponent
    ``min_exp`` whose first and last entries are nonzero; the zero
    polynomial is the empty tuple with ``min_exp == 0``.  Equal values
    therefore always compare (and hash) equal.
    """

    __slots__ = ("min_exp", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), min_exp: int = 0):
        cs = list(coeffs)
        lo = 0
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        while lo < hi and cs[lo] == 0:
            lo += 1
        if lo == hi:
            object.__setattr__(self, "min_exp", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "min_exp", min_exp + lo)
            object.__setattr__(self, "coeffs", tuple(cs[lo:hi]))

    def __setattr__(self, name, value):  # pragma: no cover - safety net
        raise AttributeError("QPoly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def q(cls, exp: int = 1) -> "QPoly":
        """The monomial q**exp (exp may be negative)."""
        return cls((1,), exp)

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "QPoly":
        if not terms:
            return cls()
        lo = min(terms)
        hi = max(terms)
        cs = [0] * (hi - lo + 1)
        for e, c in terms.items():
            cs[e - lo] = c
        return cls(cs, lo)

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        """Largest exponent with nonzero coefficient; 0 for the zero poly."""
        if not self.coeffs:
            return 0
        return self.min_exp + len(self.coeffs) - 1

    def coeff(self, exp: int) -> int:
        i = exp - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) for nonzero terms, ascending."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_exp + i, c

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "QPoly":
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        cs = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            cs[self.min_exp - lo + i] += c
        for i, c in enumerate(other.coeffs):
            cs[other.min_exp - lo + i] += c
        return QPoly(cs, lo)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs), self.min_exp)

    def __sub__(self, other) -> "QPoly":
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        return (-self) + other

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, int):
            if other == 0:
                return QPoly()
            return QPoly(tuple(c * other for c in self.coeffs), self.min_exp)
        if not isinstance(other, QPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return QPoly()
        a, b = self.coeffs, other.coeffs
        cs = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    cs[i + j] += ai * bj
        return QPoly(cs, self.min_exp + other.min_exp)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power of a QPoly; use QRational")
        out = QPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "QPoly":
        """Multiply by q**k."""
        if self.is_zero:
            return self
        return QPoly(self.coeffs, self.min_exp + k)

    # -- substitution and evaluation ----------------------------------------

    def subs_inv_q(self) -> "QPoly":
        """q -> 1/q: exponent e maps to -e."""
        return QPoly(tuple(reversed(self.coeffs)), -self.max_exp)

    def subs_neg_q(self) -> "QPoly":
        """q -> -q."""
        cs = tuple(
            c if (self.min_exp + i) % 2 == 0 else -c
            for i, c in enumerate(self.coeffs)
        )
        return QPoly(cs, self.min_exp)

    def eval_rational(self, value: Fraction | int) -> Fraction:
        """Exact evaluation at a rational point.

        Raises PoleError at value 0 when negative exponents are present.
        """
        v = Fraction(value)
        if self.is_zero:
            return Fraction(0)
        if v == 0:
            if self.min_exp < 0:
                raise PoleError("evaluation at q=0 with negative exponents")
            return Fraction(self.coeff(0))
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc * v ** self.min_exp

    def at_one(self) -> int:
        return sum(self.coeffs)

    # -- division ------------------------------------------------------------

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Exact quotient with integer coefficients; raises if not exact."""
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return QPoly()
        q, r = _divmod_frac(list(self.coeffs), list(other.coeffs))
        if any(r):
            raise ValueError("division is not exact")
        out = []
        for c in q:
            if c.denominator != 1:
                raise ValueError("quotient has non-integer coefficients")
            out.append(c.numerator)
        return QPoly(out, self.min_exp - other.min_exp)

    # -- comparison, hashing, display -----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.min_exp == other.min_exp and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.min_exp, self.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"QPoly({self})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for e, c in self.terms():
            if e == 0:
                body = str(abs(c))
            else:
                qs = "q" if e == 1 else f"q^{e}"
                body = qs if abs(c) == 1 else f"{abs(c)}*{qs}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    # -- serialization ----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "var": "q",
            "min_exp": self.min_exp,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "QPoly":
        return cls([int(c) for c in d["coeffs"]], int(d["min_exp"]))


def _divmod_frac(a: list[int], b: list[int]) -> tuple[list[Fraction], list[Fraction]]:
    """Long division of coefficient lists over the rationals."""
    r = [Fraction(c) for c in a]
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    for i in range(len(a) - len(b), -1, -1):
        f = r[i + len(b) - 1] / lead
        quo[i] = f
        if f:
            for j, bj in enumerate(b):
                r[i + j] -= f * bj
    return quo, r


def _content(cs: Sequence[int]) -> int:
    g = 0
    for c in cs:
        g = gcd(g, abs(c))
        if g == 1:
            break
    return g


def _primitive_gcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """GCD of two integer coefficient lists, primitive, positive leading."""
    fa = [Fraction(c) for c in a]
    fb = [Fraction(c) for c in b]

    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p

    fa, fb = trim(fa), trim(fb)
    while fb:
        _, r = _divmod_frac(fa, fb)  # type: ignore[arg-type]
        fa, fb = fb, trim(r)
    if not fa:
        return []
    denom = 1
    for c in fa:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in fa]
    g = _content(ints)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


class QRational:
    """Ratio of two QPoly in a unique normal form.

    Normalization: the denominator is an ordinary polynomial (min_exp 0,
    nonzero constant term) with positive leading coefficient, the pair has
    no common polynomial factor over the rationals and no common integer
    content.  Any q-power freed during reduction lives in the numerator,
    which may therefore be a genuine Laurent polynomial.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: QPoly, den: QPoly = QPoly.one()):
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            object.__setattr__(self, "num", QPoly.zero())
            object.__setattr__(self, "den", QPoly.one())
            return
        # Pull the q-power out of the denominator entirely.
        shift = -den.min_exp
        n_cs, n_lo = list(num.coeffs), num.min_exp + shift
        d_cs = list(den.coeffs)
        g = _primitive_gcd(n_cs, d_cs)
        if len(g) > 1:
            n_cs = _exact_int_div(n_cs, g)
            d_cs = _exact_int_div(d_cs, g)
        c = gcd(_content(n_cs), _content(d_cs))
        if c > 1:
            n_cs = [x // c for x in n_cs]
            d_cs = [x // c for x in d_cs]
        if d_cs[-1] < 0:
            n_cs = [-x for x in n_cs]
            d_cs = [-x for x in d_cs]
        object.__setattr__(self, "num", QPoly(n_cs, n_lo))
        object.__setattr__(self, "den", QPoly(d_cs, 0))

    def __setattr__(self, name, value):  # pragma: no cover - safety net
        raise AttributeError("QRational is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "QRational":
        return cls(QPoly.const(n))

    @classmethod
    def from_fraction(cls, f: Fraction) -> "QRational":
        return cls(QPoly.const(f.numerator), QPoly.const(f.denominator))

    @classmethod
    def from_qpoly(cls, p: QPoly) -> "QRational":
        return cls(p)

    @staticmethod
    def _coerce(value) -> "QRational | None":
        if isinstance(value, QRational):
            return value
        if isinstance(value, QPoly):
            return QRational(value)
        if isinstance(value, int):
            return QRational.from_int(value)
        if isinstance(value, Fraction):
            return QRational.from_fraction(value)
        return None

    # -- predicates ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den == QPoly.one()

    def as_qpoly(self) -> QPoly:
        """Return the value as a QPoly; raises if it is not polynomial."""
        if not self.is_polynomial:
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    def as_fraction(self) -> Fraction:
        """Return the value as a Fraction; raises if q survives."""
        if self.is_zero:
            return Fraction(0)
        if self.num.min_exp != 0 or self.num.max_exp != 0 or self.den.max_exp != 0:
            raise ValueError(f"not a constant: {self}")
        return Fraction(self.num.coeff(0), self.den.coeff(0))

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other) -> "QRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "QRational":
        return QRational(-self.num, self.den)

    def __sub__(self, other) -> "QRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QRational(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other) -> "QRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "QRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero QRational")
        return QRational(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "QRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> "QRational":
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return QRational(self.den, self.num) ** (-n)
        return QRational(self.num ** n, self.den ** n)

    # -- evaluation -------------------------------------------------------------

    def eval_rational(self, value: Fraction | int) -> Fraction:
        d = self.den.eval_rational(value)
        if d == 0:
            raise PoleError(f"denominator vanishes at q={value}")
        return self.num.eval_rational(value) / d

    def at_one(self) -> Fraction:
        return self.eval_rational(1)

    # -- comparison, hashing, display ----------------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"QRational({self})"

    def __str__(self) -> str:
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def to_json_dict(self) -> dict:
        return {"num": self.num.to_json_dict(), "den": self.den.to_json_dict()}

    @classmethod
    def from_json_dict(cls, d: dict) -> "QRational":
        return cls(QPoly.from_json_dict(d["num"]), QPoly.from_json_dict(d["den"]))


def _exact_int_div(cs: list[int], by: list[int]) -> list[int]:
    quo, rem = _divmod_frac(cs, by)
    assert not any(rem), "internal gcd division left a remainder"
    out = []
    for c in quo:
        assert c.denominator == 1, "internal gcd quotient not integral"
        out.append(c.numerator)
    return out


class TruncatedSeries:
    """Power series truncated at a fixed order.

    ``coeffs[n]`` is the coefficient of the n-th power of the formal
    variable; len(coeffs) == order + 1.  Coefficients may be Fraction or
    QRational (anything with exact ring operations and truthiness).
    Operations never report coefficients beyond the common order.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if not coeffs:
            raise ValueError("a series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):  # pragma: no cover - safety net
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int):
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def _zero(self):
        return self.coeffs[0] * 0

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)]
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)]
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        zero = self._zero()
        out = [zero] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out)

    def __rmul__(self, other) -> "TruncatedSeries":
        return self * other

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Quotient after cancelling any shared power of the variable.

        Both operands may vanish at 0 to the same order v; the quotient is
        then reported to the common order minus v.
        """
        v = 0
        while v <= other.order and not other.coeffs[v]:
            v += 1
        if v > other.order:
            raise SeriesDivisionError("denominator is zero to the truncation order")
        if any(self.coeffs[i] for i in range(min(v, self.order + 1))):
            raise SeriesDivisionError(
                "numerator valuation below denominator valuation"
            )
        a = self.coeffs[v:]
        b = other.coeffs[v:]
        n = min(len(a), len(b)) - 1
        if n < 0:
            raise SeriesDivisionError("no coefficients left after cancellation")
        lead = b[0]
        out: list = []
        for i in range(n + 1):
            t = a[i]
            for j in range(1, min(i, len(b) - 1) + 1):
                t = t - b[j] * out[i - j]
            out.append(t / lead)
        return TruncatedSeries(out)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute ``inner`` (which must vanish at 0) for the variable."""
        if inner.coeffs[0]:
            raise ValueError("composition requires zero constant term")
        n = min(self.order, inner.order)
        zero = self._zero()
        acc = TruncatedSeries([zero] * (n + 1))
        for c in reversed(self.coeffs[: n + 1]):
            acc = acc * inner
            acc = TruncatedSeries([acc.coeffs[0] + c] + list(acc.coeffs[1:]))
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"


class IntMatrix:
    """Rectangular big-integer matrix with the exact kernels used here."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        tup = tuple(tuple(int(x) for x in row) for row in entries)
        for row in tup:
            if len(row) != cols:
                raise ValueError("matrix rows have unequal lengths")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tup)

    def __setattr__(self, name, value):  # pragma: no cover - safety net
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.entries]!r})"

    def _require_square(self):
        if self.rows != self.cols:
            raise NonSquareError(f"{self.rows}x{self.cols} matrix is not square")

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        self._require_square()
        n = self.rows
        if n == 0:
            return 1
        m = [list(r) for r in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def charpoly(self) -> QPoly:
        """det(M - q*I) via the division-free Berkowitz algorithm.

        The constant term is det(M) and the leading coefficient is
        (-1)**dim.
        """
        self._require_square()
        n = self.rows
        if n == 0:
            return QPoly.one()
        a = self.entries
        # poly holds descending coefficients of det(lambda*I - M) for the
        # leading principal submatrix processed so far.
        poly: list[int] = [1, -a[0][0]]
        for i in range(1, n):
            row = a[i][:i]
            col = [a[r][i] for r in range(i)]
            corner = a[i][i]
            sub = [r[:i] for r in a[:i]]
            s: list[int] = []
            v = list(col)
            for t in range(i):
                s.append(sum(row[j] * v[j] for j in range(i)))
                if t < i - 1:
                    v = [sum(sub[r][c] * v[c] for c in range(i)) for r in range(i)]
            toep = [1, -corner] + [-x for x in s]
            new = []
            for r in range(i + 2):
                acc = 0
                for c in range(max(0, r - len(toep) + 1), min(r, i) + 1):
                    acc += toep[r - c] * poly[c]
                new.append(acc)
            poly = new
        sign = -1 if n % 2 else 1
        return QPoly([sign * poly[n - e] for e in range(n + 1)])

    def permanent(self, max_dim: int = 20) -> int:
        """Exact permanent by Ryser inclusion-exclusion with Gray codes.

        Cost is O(2**n * n); max_dim guards against runaway inputs.
        """
        self._require_square()
        n = self.rows
        if n > max_dim:
            raise SizeLimitError(f"permanent of {n}x{n} exceeds bound {max_dim}")
        if n == 0:
            return 1
        a = self.entries
        row_sums = [0] * n
        total = 0
        prev_gray = 0
        n_parity = n & 1
        for t in range(1, 1 << n):
            gray = t ^ (t >> 1)
            diff = gray ^ prev_gray
            j = diff.bit_length() - 1
            if gray & diff:
                for i in range(n):
                    row_sums[i] += a[i][j]
            else:
                for i in range(n):
                    row_sums[i] -= a[i][j]
            prev_gray = gray
            prod = 1
            for v in row_sums:
                if not v:
                    prod = 0
                    break
                prod *= v
            if prod:
                if (gray.bit_count() & 1) == n_parity:
                    total += prod
                else:
                    total -= prod
        return total
