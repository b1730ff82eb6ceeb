"""Brute-force generators, recognizers, and weight statistics.

Everything here enumerates combinatorial objects directly and never calls
a closed formula, so these functions serve as independent oracles for the
families module.  Matrices are plain tuples of 0/1 row tuples; partitions
are lists of integer lists; permutations are 1-based one-line tuples.

Statistics use 1-based row/column indices (the zero-line weight of a
matrix sums 1-based positions of its all-zero rows and columns).
"""

from __future__ import annotations

from itertools import product
from math import comb
from typing import Iterator, Sequence

from .errors import SizeLimitError
from .exactnum import QPoly

__all__ = [
    "inv_star",
    "gen_ordered_partitions",
    "gen_set_partitions",
    "fubini_oracle",
    "gen_alternating_pairs",
    "ordered_q_oracle",
    "is_lonesum",
    "is_gamma_free",
    "is_perm_matrix",
    "nu_weight",
    "ones_minus_cols",
    "gen_matrix_class",
    "class_poly",
    "count_class",
    "inversions",
    "gen_vesztergombi",
    "vesztergombi_oracle",
    "gamma_free_first_column_decomposition_check",
]

MATRIX_CLASSES = ("lonesum", "gamma_free", "perm_matrix")

Matrix = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# partitions and the inversion statistic
# ---------------------------------------------------------------------------

def inv_star(blocks: Sequence[Sequence[int]]) -> int:
    """Partition inversions: pairs (b, B_j) with b in an earlier block and
    b greater than min(B_j)."""
    mins = [min(b) for b in blocks]
    count = 0
    for i, block in enumerate(blocks):
        for j in range(i + 1, len(blocks)):
            mj = mins[j]
            for b in block:
                if b > mj:
                    count += 1
    return count


def _ordered_partitions(items: list) -> Iterator[list[list]]:
    if not items:
        yield []
        return
    rest, last = items[:-1], items[-1]
    for part in _ordered_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [last]] + part[i + 1:]
        for i in range(len(part) + 1):
            yield part[:i] + [[last]] + part[i:]


def gen_ordered_partitions(n: int) -> Iterator[list[list[int]]]:
    """All ordered set partitions of {1,...,n}, each exactly once."""
    if n > 9:
        raise SizeLimitError(f"ordered partitions of {n} elements (Fubini growth)")
    yield from _ordered_partitions(list(range(1, n + 1)))


def gen_set_partitions(items: list) -> Iterator[list[list]]:
    """Unordered set partitions with blocks in canonical (min-sorted) order.

    Inserting the largest element never disturbs the order of block minima,
    so the canonical order is maintained for free.
    """
    if not items:
        yield []
        return
    rest, last = items[:-1], items[-1]
    for part in gen_set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [last]] + part[i + 1:]
        yield part + [[last]]


def _poly_from_counts(counts: dict[int, int]) -> QPoly:
    return QPoly.from_terms(counts)


def fubini_oracle(n: int) -> QPoly:
    """Sum of q**inv_star over all ordered set partitions of {1,...,n}."""
    counts: dict[int, int] = {}
    for part in gen_ordered_partitions(n):
        w = inv_star(part)
        counts[w] = counts.get(w, 0) + 1
    return _poly_from_counts(counts)


# ---------------------------------------------------------------------------
# alternating block pairs
# ---------------------------------------------------------------------------

def _anchored_ordered_partitions(items: list[int], anchor: int, first: bool) -> dict[int, list[int]]:
    """Inv* weights of ordered partitions of items, keyed by block count,
    keeping the anchor's block first (or last)."""
    by_blocks: dict[int, list[int]] = {}
    for part in _ordered_partitions(items):
        block = 0 if first else len(part) - 1
        if anchor not in part[block]:
            continue
        by_blocks.setdefault(len(part), []).append(inv_star(part))
    return by_blocks


def gen_alternating_pairs(n: int, k: int) -> Iterator[tuple[list[list[int]], list[list[int]]]]:
    """Pairs of ordered partitions with equal block counts: one of
    {0,1,...,n} with the 0-block first, one of {1,...,k,k+1} with the
    (k+1)-block last.  The special low element is encoded as 0 and the
    special high element as k+1, which gives them the right comparison
    order for inv_star.
    """
    if n > 6 or k > 6:
        raise SizeLimitError(f"alternating pairs at ({n}, {k})")
    blues: dict[int, list[list[list[int]]]] = {}
    for part in _ordered_partitions(list(range(n + 1))):
        if 0 in part[0]:
            blues.setdefault(len(part), []).append(part)
    for red in _ordered_partitions(list(range(1, k + 2))):
        if k + 1 not in red[-1]:
            continue
        for blue in blues.get(len(red), []):
            yield blue, red


def ordered_q_oracle(n: int, k: int) -> QPoly:
    """Sum of q**(inv_star(blue) + inv_star(red)) over alternating pairs.

    The weight is additive across the two partitions, so the sum is the
    convolution of the two one-sided weight distributions.
    """
    if n > 6 or k > 6:
        raise SizeLimitError(f"alternating pairs at ({n}, {k})")
    blue = _anchored_ordered_partitions(list(range(n + 1)), 0, first=True)
    red = _anchored_ordered_partitions(list(range(1, k + 2)), k + 1, first=False)
    counts: dict[int, int] = {}
    for b, blue_ws in blue.items():
        red_ws = red.get(b)
        if not red_ws:
            continue
        red_hist: dict[int, int] = {}
        for w in red_ws:
            red_hist[w] = red_hist.get(w, 0) + 1
        for wb in blue_ws:
            for wr, mult in red_hist.items():
                counts[wb + wr] = counts.get(wb + wr, 0) + mult
    return _poly_from_counts(counts)


# ---------------------------------------------------------------------------
# 0/1 matrix classes
# ---------------------------------------------------------------------------

def _pattern_scan(m: Matrix, patterns: tuple[tuple[int, int, int, int], ...]) -> bool:
    """True when no 2x2 minor (arbitrary row and column pairs) matches any
    forbidden pattern (a, b, c, d) read row-major."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    for i1 in range(rows):
        r1 = m[i1]
        for i2 in range(i1 + 1, rows):
            r2 = m[i2]
            for j1 in range(cols):
                a, c = r1[j1], r2[j1]
                for j2 in range(j1 + 1, cols):
                    quad = (a, r1[j2], c, r2[j2])
                    if quad in patterns:
                        return False
    return True


_LONESUM_FORBIDDEN = ((0, 1, 1, 0), (1, 0, 0, 1))
_GAMMA_FORBIDDEN = ((1, 1, 1, 0), (1, 1, 1, 1))
_PERM_FORBIDDEN = ((0, 1, 1, 0), (1, 1, 1, 0))


def is_lonesum(m: Sequence[Sequence[int]]) -> bool:
    """Reconstructible from row and column sums: avoids the two crossing
    2x2 patterns."""
    return _pattern_scan(tuple(tuple(r) for r in m), _LONESUM_FORBIDDEN)


def is_gamma_free(m: Sequence[Sequence[int]]) -> bool:
    return _pattern_scan(tuple(tuple(r) for r in m), _GAMMA_FORBIDDEN)


def is_perm_matrix(m: Sequence[Sequence[int]]) -> bool:
    """Rectangular permutation tableau: every column holds a 1 and the two
    tableau patterns are avoided."""
    mt = tuple(tuple(r) for r in m)
    if mt:
        cols = len(mt[0])
        for j in range(cols):
            if not any(row[j] for row in mt):
                return False
    return _pattern_scan(mt, _PERM_FORBIDDEN)


def nu_weight(m: Sequence[Sequence[int]], cols: int | None = None) -> int:
    """Sum of the 1-based indices of all-zero rows plus all-zero columns.

    cols pins the column count for degenerate shapes (a matrix with no
    rows still has columns, all of them zero).
    """
    if cols is None:
        cols = len(m[0]) if m else 0
    total = 0
    for i, row in enumerate(m):
        if not any(row):
            total += i + 1
    for j in range(cols):
        if not any(row[j] for row in m):
            total += j + 1
    return total


def ones_minus_cols(m: Sequence[Sequence[int]], cols: int | None = None) -> int:
    if cols is None:
        cols = len(m[0]) if m else 0
    ones = sum(sum(row) for row in m)
    return ones - cols


_RECOGNIZERS = {
    "lonesum": is_lonesum,
    "gamma_free": is_gamma_free,
    "perm_matrix": is_perm_matrix,
}

_STATISTICS = {
    None: lambda m, cols: 0,
    "none": lambda m, cols: 0,
    "nu_sum": nu_weight,
    "ones_minus_cols": ones_minus_cols,
}


def gen_matrix_class(cls: str, n: int, k: int) -> Iterator[Matrix]:
    """All n x k matrices of the class, by recognizer-filtered scan of all
    2**(n*k) candidates."""
    if cls not in _RECOGNIZERS:
        raise ValueError(f"unknown matrix class {cls!r}")
    if n * k > 24:
        raise SizeLimitError(f"matrix scan 2**{n * k} at ({n}, {k})")
    if n == 0:
        # The empty filling still has k columns; only the column-covering
        # class rejects it when k > 0.
        if cls != "perm_matrix" or k == 0:
            yield ()
        return
    accept = _RECOGNIZERS[cls]
    if k == 0:
        empty = tuple(() for _ in range(n))
        if accept(empty):
            yield empty
        return
    for bits in product((0, 1), repeat=n * k):
        m = tuple(bits[i * k:(i + 1) * k] for i in range(n))
        if accept(m):
            yield m


def class_poly(cls: str, n: int, k: int, statistic: str | None = None) -> QPoly:
    """Weight generating polynomial sum of q**statistic over the class."""
    if statistic not in _STATISTICS:
        raise ValueError(f"unknown statistic {statistic!r}")
    stat = _STATISTICS[statistic]
    counts: dict[int, int] = {}
    for m in gen_matrix_class(cls, n, k):
        w = stat(m, k)
        counts[w] = counts.get(w, 0) + 1
    return _poly_from_counts(counts)


def count_class(cls: str, n: int, k: int) -> int:
    return sum(1 for _ in gen_matrix_class(cls, n, k))


# ---------------------------------------------------------------------------
# banded permutations
# ---------------------------------------------------------------------------

def inversions(perm: Sequence[int]) -> int:
    count = 0
    for i in range(len(perm)):
        pi = perm[i]
        for j in range(i + 1, len(perm)):
            if pi > perm[j]:
                count += 1
    return count


def gen_vesztergombi(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Permutations pi of [n+k] with -k <= pi(i) - i <= n, generated by
    backtracking inside the band (1-based one-line notation)."""
    if n + k > 9:
        raise SizeLimitError(f"banded permutations of [{n + k}]")
    m = n + k
    chosen: list[int] = []
    used = [False] * (m + 1)

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i > m:
            yield tuple(chosen)
            return
        lo = max(1, i - k)
        hi = min(m, i + n)
        for v in range(lo, hi + 1):
            if not used[v]:
                used[v] = True
                chosen.append(v)
                yield from rec(i + 1)
                chosen.pop()
                used[v] = False

    yield from rec(1)


def vesztergombi_oracle(n: int, k: int) -> QPoly:
    """Sum of q**inversions over the banded permutation class."""
    counts: dict[int, int] = {}
    for perm in gen_vesztergombi(n, k):
        w = inversions(perm)
        counts[w] = counts.get(w, 0) + 1
    return _poly_from_counts(counts)


# ---------------------------------------------------------------------------
# first-column peeling of gamma-free matrices
# ---------------------------------------------------------------------------

def gamma_free_first_column_decomposition_check(n: int, k: int) -> bool:
    """Count n x (k+1) gamma-free matrices against the first-column
    construction: pick a set R of rows carrying a 1 in column one; all of
    them except the bottom-most are forced to be zero to the right, and
    the untouched rows plus that bottom row form a free gamma-free matrix
    with k columns.  The empty R leaves an all-zero first column.
    """
    if n * (k + 1) > 24:
        raise SizeLimitError(f"gamma-free decomposition at ({n}, {k})")
    lhs = count_class("gamma_free", n, k + 1)
    rhs = count_class("gamma_free", n, k)
    for r in range(1, n + 1):
        rhs += comb(n, r) * count_class("gamma_free", n - r + 1, k)
    return lhs == rhs
