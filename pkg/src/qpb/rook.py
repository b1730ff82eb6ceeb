"""Boards, rook placements, and the cell-inversion statistic.

A board is a 0/1 mask inside a bounding rectangle; rooks sit on mask cells,
never sharing a row or column.  The inversion statistic counts cells of the
bounding rectangle (present on the board or not) that see no rook weakly to
their right in the same row and no rook strictly below in the same column.
Counting the whole rectangle rather than the mask is what makes the
reflection, staircase, and block-composition laws exact; on a full square
with a full placement the statistic is the ordinary permutation inversion
number.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import SizeLimitError
from .exactnum import IntMatrix, QPoly

__all__ = [
    "Board",
    "RookConfig",
    "gr_inv",
    "q_rook_number",
    "rook_placements",
    "placement_from_permutation",
    "reflect_updown",
    "rotate_180",
    "block_over",
    "full_board",
    "lower_triangular",
    "upper_triangular",
    "secondary_staircase",
    "build_v_matrix",
]

DEFAULT_MAX_AREA = 64


@dataclass(frozen=True)
class Board:
    """0/1 cell mask; cells[i][j] == 1 means the cell is on the board."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cols = len(self.cells[0]) if self.cells else 0
        for row in self.cells:
            if len(row) != cols:
                raise ValueError("board rows have unequal lengths")
            if any(v not in (0, 1) for v in row):
                raise ValueError("board entries must be 0 or 1")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Board":
        return cls(tuple(tuple(int(v) for v in r) for r in rows))

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0]) if self.cells else 0

    @property
    def area(self) -> int:
        return self.rows * self.cols

    def cell_count(self) -> int:
        return sum(sum(r) for r in self.cells)

    def to_int_matrix(self) -> IntMatrix:
        return IntMatrix(self.cells)


@dataclass(frozen=True)
class RookConfig:
    """Non-attacking rooks on the cells of a board (0-based positions)."""

    board: Board
    rooks: frozenset[tuple[int, int]]

    def __post_init__(self):
        seen_rows: set[int] = set()
        seen_cols: set[int] = set()
        for i, j in self.rooks:
            if not (0 <= i < self.board.rows and 0 <= j < self.board.cols):
                raise ValueError(f"rook ({i}, {j}) outside the board rectangle")
            if not self.board.cells[i][j]:
                raise ValueError(f"rook ({i}, {j}) is not on a board cell")
            if i in seen_rows or j in seen_cols:
                raise ValueError("two rooks share a row or column")
            seen_rows.add(i)
            seen_cols.add(j)


def placement_from_permutation(perm: Sequence[int], board: Board) -> RookConfig:
    """Rooks at (i, perm[i]) from 1-based one-line notation."""
    return RookConfig(board, frozenset((i, v - 1) for i, v in enumerate(perm)))


def gr_inv(config: RookConfig) -> int:
    """Uncancelled cells of the bounding rectangle: no rook weakly right in
    the row, none strictly below in the column."""
    board = config.board
    row_rook = [-1] * board.rows
    col_rook = [-1] * board.cols
    for i, j in config.rooks:
        row_rook[i] = j
        col_rook[j] = i
    count = 0
    for i in range(board.rows):
        rj = row_rook[i]
        for j in range(board.cols):
            if rj >= j:
                continue
            if col_rook[j] > i:
                continue
            count += 1
    return count


def rook_placements(board: Board, k: int) -> Iterator[frozenset[tuple[int, int]]]:
    """All placements of exactly k non-attacking rooks on the board cells."""
    row_cells = [tuple(j for j, v in enumerate(r) if v) for r in board.cells]
    n_rows = board.rows
    placed: list[tuple[int, int]] = []
    used_cols: set[int] = set()

    def rec(row: int) -> Iterator[frozenset[tuple[int, int]]]:
        if len(placed) == k:
            yield frozenset(placed)
            return
        if row >= n_rows or n_rows - row < k - len(placed):
            return
        yield from rec(row + 1)  # leave this row empty
        for j in row_cells[row]:
            if j not in used_cols:
                used_cols.add(j)
                placed.append((row, j))
                yield from rec(row + 1)
                placed.pop()
                used_cols.remove(j)

    yield from rec(0)


def q_rook_number(board: Board, k: int, max_area: int = DEFAULT_MAX_AREA) -> QPoly:
    """Generating polynomial of k-rook placements by the inversion statistic."""
    if board.area > max_area:
        raise SizeLimitError(f"board area {board.area} exceeds bound {max_area}")
    if k < 0 or k > min(board.rows, board.cols):
        raise ValueError(f"k must lie in [0, min(rows, cols)], got {k}")
    # Inline gr_inv over reusable rook maps; placements dominate the cost.
    counts: dict[int, int] = {}
    rows, cols = board.rows, board.cols
    for rooks in rook_placements(board, k):
        row_rook = [-1] * rows
        col_rook = [-1] * cols
        for i, j in rooks:
            row_rook[i] = j
            col_rook[j] = i
        w = 0
        for i in range(rows):
            rj = row_rook[i]
            for j in range(cols):
                if rj >= j:
                    continue
                if col_rook[j] > i:
                    continue
                w += 1
        counts[w] = counts.get(w, 0) + 1
    return QPoly.from_terms(counts)


# ---------------------------------------------------------------------------
# board algebra
# ---------------------------------------------------------------------------

def reflect_updown(board: Board) -> Board:
    return Board(tuple(reversed(board.cells)))


def rotate_180(board: Board) -> Board:
    return Board(tuple(tuple(reversed(r)) for r in reversed(board.cells)))


def block_over(top: Board, bottom: Board) -> Board:
    """Block board [[top, J], [J, bottom]] with all-ones glue blocks sized
    to fit the two diagonal blocks."""
    r1, c1 = top.rows, top.cols
    r2, c2 = bottom.rows, bottom.cols
    rows = []
    for i in range(r1):
        rows.append(top.cells[i] + (1,) * c2)
    for i in range(r2):
        rows.append((1,) * c1 + bottom.cells[i])
    return Board(tuple(rows))


def full_board(rows: int, cols: int) -> Board:
    return Board(tuple((1,) * cols for _ in range(rows)))


def lower_triangular(n: int) -> Board:
    """T_n: cell (i, j) present iff i >= j (1-based)."""
    return Board(tuple(tuple(1 if i >= j else 0 for j in range(n)) for i in range(n)))


def upper_triangular(k: int) -> Board:
    """T^k: cell (i, j) present iff i <= j (1-based)."""
    return Board(tuple(tuple(1 if i <= j else 0 for j in range(k)) for i in range(k)))


def secondary_staircase(n: int) -> Board:
    """H_n: ones on and above the secondary diagonal (i <= n - j + 1, 1-based)."""
    return Board(
        tuple(tuple(1 if i + j <= n - 1 else 0 for j in range(n)) for i in range(n))
    )


def build_v_matrix(n: int, k: int) -> Board:
    """(n+k) x (n+k) band board with cell (i, j) present iff
    -k <= i - j <= n (1-based indices)."""
    if n < 0 or k < 0:
        raise ValueError("build_v_matrix needs n, k >= 0")
    m = n + k
    return Board(
        tuple(
            tuple(1 if -k <= (i + 1) - (j + 1) <= n else 0 for j in range(m))
            for i in range(m)
        )
    )
