"""Rook placements on the upper-triangular boards T_n = {(i, j) : 1 <= i <= j <= n}.

Rooks are stored sparsely as a sorted tuple of 1-based cells.  ``board = -1``
is the unit rook, which exists only as the identity of the rook algebra; the
empty rook on T_0 is a different object and corresponds to the partition 1.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import (
    BoardTooLarge,
    InvalidRook,
    NotExtendable,
    ParseError,
    UnitRook,
)
from .partitions import TRIVIAL, SetPartition

Cell = tuple[int, int]

BRUTEFORCE_MAX_BOARD = 8


@dataclass(frozen=True)
class RookPlacement:
    board: int
    ones: tuple[Cell, ...] = ()

    def __post_init__(self):
        cells = tuple(sorted(self.ones))
        object.__setattr__(self, "ones", cells)
        if self.board < -1:
            raise InvalidRook(f"board size {self.board} < -1")
        rows, cols = set(), set()
        for i, j in cells:
            if not 1 <= i <= j <= self.board:
                raise InvalidRook(f"cell ({i}, {j}) is not on T_{self.board}")
            if i in rows:
                raise InvalidRook(f"two rooks in row {i}")
            if j in cols:
                raise InvalidRook(f"two rooks in column {j}")
            rows.add(i)
            cols.add(j)

    @property
    def is_unit(self) -> bool:
        return self.board == -1

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.ones

    def __str__(self) -> str:
        return rook_to_json(self)


UNIT_ROOK = RookPlacement(-1)


@dataclass(frozen=True)
class PermutationMatrix:
    size: int
    column_of: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.column_of) != list(range(1, self.size + 1)):
            raise ValueError(f"{self.column_of} is not a permutation of [{self.size}]")

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        return int(self.column_of[i - 1] == j)


# -- the partition dictionary ---------------------------------------------


def partition_to_rook(pi: SetPartition) -> RookPlacement:
    """R_pi: a one at (i, j) whenever i and j + 1 are adjacent in a block."""
    if pi.n == 0:
        return UNIT_ROOK
    cells = [(a, b - 1) for block in pi.blocks for a, b in zip(block, block[1:])]
    return RookPlacement(pi.n - 1, tuple(cells))


def rook_to_partition(rook: RookPlacement) -> SetPartition:
    """pi_R: i and j + 1 share a block whenever R has a one at (i, j)."""
    if rook.is_unit:
        return TRIVIAL
    n = rook.board + 1
    successor = {i: j + 1 for i, j in rook.ones}
    has_predecessor = set(successor.values())
    blocks = []
    for start in range(1, n + 1):
        if start in has_predecessor:
            continue
        block = [start]
        while block[-1] in successor:
            block.append(successor[block[-1]])
        blocks.append(tuple(block))
    return SetPartition(n, tuple(blocks))


def enumerate_rooks(board: int) -> Iterator[RookPlacement]:
    """Every rook on T_board, built row by row (independent of partitions)."""
    if board == -1:
        yield UNIT_ROOK
        return
    if board < -1:
        raise InvalidRook(f"board size {board} < -1")

    def place(i: int, used: frozenset[int], cells: tuple[Cell, ...]):
        if i > board:
            yield RookPlacement(board, cells)
            return
        yield from place(i + 1, used, cells)
        for j in range(i, board + 1):
            if j not in used:
                yield from place(i + 1, used | {j}, cells + ((i, j),))

    yield from place(1, frozenset(), ())


# -- extended direct sum --------------------------------------------------


def edsum(left: RookPlacement, right: RookPlacement) -> RookPlacement:
    """left (+) (0) (+) right; the unit rook is a two-sided identity."""
    if left.is_unit:
        return right
    if right.is_unit:
        return left
    off = left.board + 1
    cells = left.ones + tuple((i + off, j + off) for i, j in right.ones)
    return RookPlacement(left.board + right.board + 1, cells)


def slash_decompositions(rook: RookPlacement) -> list[int]:
    """Cut indices m with rook = edsum(R', R'') and R' on T_{m-1}.

    A cut at m needs no one in rows <= m and columns >= m.  The list is empty
    exactly when the associated partition is atomic.
    """
    if rook.is_unit:
        raise UnitRook("the unit rook has no decompositions")
    return [
        m
        for m in range(1, rook.board + 1)
        if not any(i <= m <= j for i, j in rook.ones)
    ]


def atomic_rook_factor(rook: RookPlacement) -> list[RookPlacement]:
    """Split a rook on T_n (n >= 0) into edsum factors at every cut."""
    cuts = slash_decompositions(rook)
    bounds = [0, *cuts, rook.board + 1]
    factors = []
    for lo, hi in zip(bounds, bounds[1:]):
        cells = tuple((i - lo, j - lo) for i, j in rook.ones if lo < i <= hi)
        factors.append(RookPlacement(hi - lo - 1, cells))
    return factors


def is_atomic_rook(rook: RookPlacement) -> bool:
    return not rook.is_unit and not slash_decompositions(rook)


# -- extendability --------------------------------------------------------


def zero_lines(rook: RookPlacement) -> tuple[list[int], list[int]]:
    """Indices of the empty rows and empty columns of the rook, increasing."""
    rows = {i for i, _ in rook.ones}
    cols = {j for _, j in rook.ones}
    span = range(1, rook.board + 1)
    zero_rows = [i for i in span if i not in rows]
    zero_cols = [j for j in span if j not in cols]
    assert len(zero_rows) == len(zero_cols), "rook has unequal zero row/column counts"
    return zero_rows, zero_cols


def extension_obstruction(rook: RookPlacement) -> tuple[int, int, int] | None:
    """First (k, i_k, j_k) with i_k <= j_k, or None if the rook is extendable."""
    if rook.is_unit:
        raise UnitRook("extendability is not defined for the unit rook")
    zero_rows, zero_cols = zero_lines(rook)
    for k, (i, j) in enumerate(zip(zero_rows, zero_cols), start=1):
        if i <= j:
            return k, i, j
    return None


def is_extendable(rook: RookPlacement) -> bool:
    """Linear-time test: the k-th empty row must lie strictly below the k-th empty column."""
    return extension_obstruction(rook) is None


def extend(rook: RookPlacement) -> PermutationMatrix:
    """Complete the rook to a permutation matrix by pairing the k-th empty row
    with the k-th empty column; the added ones all fall below the diagonal."""
    cert = extension_obstruction(rook)
    if cert is not None:
        k, i, j = cert
        raise NotExtendable(f"i_{k} = {i} <= j_{k} = {j}", cert)
    column_of = [0] * rook.board
    for i, j in rook.ones:
        column_of[i - 1] = j
    for i, j in zip(*zero_lines(rook)):
        column_of[i - 1] = j
    return PermutationMatrix(rook.board, tuple(column_of))


def is_extendable_bruteforce(rook: RookPlacement) -> bool:
    """Search all permutation matrices for one agreeing with the rook on T_board."""
    if rook.is_unit:
        raise UnitRook("extendability is not defined for the unit rook")
    n = rook.board
    if n > BRUTEFORCE_MAX_BOARD:
        raise BoardTooLarge(f"board {n} exceeds brute-force limit {BRUTEFORCE_MAX_BOARD}")
    row_cells = [frozenset(j for i, j in rook.ones if i == r) for r in range(1, n + 1)]
    for perm in itertools.permutations(range(1, n + 1)):
        # upper-triangle part of row r of P
        if all(
            frozenset((c,) if c >= r else ()) == row_cells[r - 1]
            for r, c in enumerate(perm, start=1)
        ):
            return True
    return False


# -- the rook algebra -----------------------------------------------------


class RookAlgebraElement:
    """Finitely supported integer combination of rooks (the algebra QR)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[RookPlacement, int] | None = None):
        self.terms = {r: c for r, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, rook: RookPlacement, coeff: int = 1) -> RookAlgebraElement:
        return cls({rook: coeff})

    @classmethod
    def one(cls) -> RookAlgebraElement:
        return cls({UNIT_ROOK: 1})

    def __add__(self, other: RookAlgebraElement) -> RookAlgebraElement:
        acc = defaultdict(int, self.terms)
        for r, c in other.terms.items():
            acc[r] += c
        return RookAlgebraElement(acc)

    def __mul__(self, other: RookAlgebraElement) -> RookAlgebraElement:
        return rook_product(self, other)

    def __rmul__(self, scalar: int) -> RookAlgebraElement:
        return RookAlgebraElement({r: scalar * c for r, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, RookAlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        inner = " + ".join(f"{c}*{rook_to_json(r)}" for r, c in sorted_terms(self))
        return f"RookAlgebraElement({inner or '0'})"


def sorted_terms(u: RookAlgebraElement) -> list[tuple[RookPlacement, int]]:
    return sorted(u.terms.items(), key=lambda rc: (rc[0].board, rc[0].ones))


def rook_product(u: RookAlgebraElement, v: RookAlgebraElement) -> RookAlgebraElement:
    acc: dict[RookPlacement, int] = defaultdict(int)
    for r, a in u.terms.items():
        for s, b in v.terms.items():
            acc[edsum(r, s)] += a * b
    return RookAlgebraElement(acc)


# -- serialization --------------------------------------------------------


def rook_to_dict(rook: RookPlacement) -> dict:
    return {"board": rook.board, "ones": [[i, j] for i, j in rook.ones]}


def rook_to_json(rook: RookPlacement) -> str:
    return json.dumps(rook_to_dict(rook), separators=(",", ":"))


def rook_from_json(text: str) -> RookPlacement:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid rook JSON: {exc.msg}", exc.pos) from exc
    if not isinstance(data, dict) or set(data) != {"board", "ones"}:
        raise ParseError('rook JSON must be an object with keys "board" and "ones"')
    board, ones = data["board"], data["ones"]
    if not isinstance(board, int) or isinstance(board, bool):
        raise ParseError('"board" must be an integer')
    if not isinstance(ones, list) or not all(
        isinstance(c, list) and len(c) == 2 and all(type(x) is int for x in c)
        for c in ones
    ):
        raise ParseError('"ones" must be a list of [i, j] integer pairs')
    if len({tuple(c) for c in ones}) != len(ones):
        raise InvalidRook("repeated cell")
    return RookPlacement(board, tuple(tuple(c) for c in ones))


def render_grid(rook: RookPlacement) -> str:
    """ASCII picture of the board: '1' rook, '.' empty cell, ' ' off-board."""
    lines = []
    for i in range(1, rook.board + 1):
        lines.append(
            "".join(
                " " if j < i else ("1" if (i, j) in rook.ones else ".")
                for j in range(1, rook.board + 1)
            )
        )
    return "\n".join(lines)


def partition_is_extendable(pi: SetPartition) -> bool:
    return is_extendable(partition_to_rook(pi))

