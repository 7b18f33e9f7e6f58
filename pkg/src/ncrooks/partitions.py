"""Set partitions of [n] = {1, ..., n} in standard form.

A partition is stored with its blocks ordered by increasing minimum and the
elements of every block increasing.  The unique partition of the empty set
(``TRIVIAL``) is the identity for both the slash and the split product.

Two encodings are supported besides the block list:

* the restricted growth function (RGF) ``a_1 ... a_n`` where ``a_i`` is the
  index of the block holding ``i``;
* the text form ``"136|2459|78"`` (digit shorthand, n <= 9) or
  ``"1,3,6|2,4,5,9|7,8"`` (comma form, any n), with ``"()"`` for the trivial
  partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence

from .errors import (
    GapError,
    InvalidRGF,
    NCRooksError,
    OverlapError,
    ParseError,
    SizeMismatch,
    TrivialInput,
)

RGF = tuple[int, ...]

TRIVIAL_TEXT = "()"


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise GapError(f"negative ground-set size {self.n}")
        seen = set()
        last_min = 0
        for block in self.blocks:
            if not block:
                raise NCRooksError("empty block")
            if any(a >= b for a, b in zip(block, block[1:])):
                raise NCRooksError(f"block {block} is not strictly increasing")
            if block[0] <= last_min:
                raise NCRooksError("blocks are not ordered by increasing minimum")
            last_min = block[0]
            for x in block:
                if x in seen:
                    raise OverlapError(f"element {x} appears in two blocks")
                seen.add(x)
        if seen != set(range(1, self.n + 1)):
            raise GapError(f"blocks do not cover exactly [1..{self.n}]")

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"SetPartition({format_partition(self)!r})"

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def is_trivial(self) -> bool:
        return self.n == 0


TRIVIAL = SetPartition(0, ())


def normalize(raw_blocks: Iterable[Iterable[int]]) -> SetPartition:
    """Put an arbitrary block collection into standard form."""
    blocks = []
    seen: set[int] = set()
    for raw in raw_blocks:
        block = tuple(sorted(raw))
        if not block:
            raise NCRooksError("empty block")
        if len(set(block)) != len(block):
            raise OverlapError(f"repeated element in block {block}")
        overlap = seen.intersection(block)
        if overlap:
            raise OverlapError(f"element {min(overlap)} appears in two blocks")
        seen.update(block)
        blocks.append(block)
    n = len(seen)
    if seen != set(range(1, n + 1)):
        missing = sorted(set(range(1, max(seen, default=0) + 1)) - seen)
        raise GapError(
            f"union of blocks is not [1..{n}]"
            + (f"; missing {missing}" if missing else "")
        )
    blocks.sort(key=lambda b: b[0])
    return SetPartition(n, tuple(blocks))


# -- RGF codec -----------------------------------------------------------


def is_rgf(word: Sequence[int]) -> bool:
    top = 0
    for a in word:
        if not 1 <= a <= top + 1:
            return False
        top = max(top, a)
    return True


def to_rgf(pi: SetPartition) -> RGF:
    word = [0] * pi.n
    for j, block in enumerate(pi.blocks, start=1):
        for x in block:
            word[x - 1] = j
    return tuple(word)


def from_rgf(word: Sequence[int]) -> SetPartition:
    blocks: list[list[int]] = []
    for i, a in enumerate(word, start=1):
        if a == len(blocks) + 1:
            blocks.append([i])
        elif 1 <= a <= len(blocks):
            blocks[a - 1].append(i)
        else:
            raise InvalidRGF(
                f"letter {a} at position {i} exceeds 1 + running maximum {len(blocks)}"
            )
    return SetPartition(len(word), tuple(tuple(b) for b in blocks))


def rgf_words(n: int) -> Iterator[RGF]:
    """All restricted growth functions of length n in lexicographic order."""
    if n == 0:
        yield ()
        return
    word = [1] * n
    # prefix_max[i] = max(word[:i]); word[0] is pinned to 1
    prefix_max = [0] + [1] * n
    while True:
        yield tuple(word)
        i = n - 1
        while i > 0 and word[i] > prefix_max[i]:
            i -= 1
        if i == 0:
            return
        word[i] += 1
        top = max(prefix_max[i], word[i])
        for j in range(i + 1, n):
            word[j] = 1
            prefix_max[j] = top
        prefix_max[n] = top


def enumerate_partitions(n: int) -> Iterator[SetPartition]:
    """Every partition of [n] once, in RGF-lexicographic order.

    The count is the Bell number B(n); n <= 12 is the practical ceiling.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    for word in rgf_words(n):
        yield from_rgf(word)


# -- products ------------------------------------------------------------


def shift(pi: SetPartition, m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(x + m for x in block) for block in pi.blocks)


def slash(pi: SetPartition, sigma: SetPartition) -> SetPartition:
    return SetPartition(pi.n + sigma.n, pi.blocks + shift(sigma, pi.n))


def split(pi: SetPartition, sigma: SetPartition) -> SetPartition:
    return from_rgf(to_rgf(pi) + to_rgf(sigma))


def restrict(pi: SetPartition, lo: int, hi: int) -> SetPartition:
    """The partition induced on the window (lo, hi], relabelled to [hi - lo].

    Only meaningful when no block straddles ``lo`` or ``hi``.
    """
    blocks = []
    for block in pi.blocks:
        if lo < block[0] <= hi:
            blocks.append(tuple(x - lo for x in block))
    return SetPartition(hi - lo, tuple(blocks))


def slash_cuts(pi: SetPartition) -> list[int]:
    """All m in [1, n-1] with pi = (pi on [m]) | (pi on [m+1, n])."""
    block_max = [0] * (pi.n + 1)
    for block in pi.blocks:
        for x in block:
            block_max[x] = block[-1]
    cuts = []
    reach = 0
    for x in range(1, pi.n):
        reach = max(reach, block_max[x])
        if reach == x:
            cuts.append(x)
    return cuts


def split_cuts(pi: SetPartition) -> list[int]:
    """All m in [1, n-1] whose RGF suffix a_{m+1} ... a_n is itself an RGF."""
    word = to_rgf(pi)
    return [m for m in range(1, pi.n) if is_rgf(word[m:])]


def is_atomic(pi: SetPartition) -> bool:
    return pi.n > 0 and not slash_cuts(pi)


def is_unsplitable(pi: SetPartition) -> bool:
    return pi.n > 0 and not split_cuts(pi)


def _pieces(n: int, cuts: list[int]) -> list[tuple[int, int]]:
    bounds = [0, *cuts, n]
    return list(zip(bounds, bounds[1:]))


def atomic_factor(pi: SetPartition) -> list[SetPartition]:
    """The unique factorization pi = pi_1 | ... | pi_t into atomic partitions."""
    if pi.n == 0:
        raise TrivialInput("the trivial partition has no atomic factorization")
    return [restrict(pi, lo, hi) for lo, hi in _pieces(pi.n, slash_cuts(pi))]


def unsplitable_factor(pi: SetPartition) -> list[SetPartition]:
    """The unique factorization pi = pi_1 o ... o pi_t into unsplitable partitions."""
    if pi.n == 0:
        raise TrivialInput("the trivial partition has no unsplitable factorization")
    word = to_rgf(pi)
    return [from_rgf(word[lo:hi]) for lo, hi in _pieces(pi.n, split_cuts(pi))]


def slash_all(parts: Iterable[SetPartition]) -> SetPartition:
    return reduce(slash, parts, TRIVIAL)


def split_all(parts: Iterable[SetPartition]) -> SetPartition:
    return reduce(split, parts, TRIVIAL)


# -- refinement order ----------------------------------------------------


def coarser_eq(sigma: SetPartition, pi: SetPartition) -> bool:
    """True iff every block of pi lies inside a block of sigma (sigma >= pi)."""
    if sigma.n != pi.n:
        raise SizeMismatch(f"partitions of [{sigma.n}] and [{pi.n}] are not comparable")
    label = to_rgf(sigma)
    return all(len({label[x - 1] for x in block}) == 1 for block in pi.blocks)


# -- text form -----------------------------------------------------------


def format_partition(pi: SetPartition) -> str:
    if pi.n == 0:
        return TRIVIAL_TEXT
    sep = "" if pi.n <= 9 else ","
    return "|".join(sep.join(map(str, block)) for block in pi.blocks)


def parse_partition(text: str) -> SetPartition:
    """Parse digit shorthand or comma form; the result is normalized.

    Without any comma every block is read digit by digit, unless that reading
    is not a partition, in which case each block is read as a single integer
    (so an all-singleton partition of [10] or more round-trips).
    """
    text = text.strip()
    if text in (TRIVIAL_TEXT, ""):
        return TRIVIAL
    tokens = _block_tokens(text)
    if "," in text:
        blocks = [_comma_block(tok, pos) for tok, pos in tokens]
        return _normalize_parsed(blocks)
    for tok, pos in tokens:
        for off, ch in enumerate(tok):
            if not ch.isdigit():
                raise ParseError(f"unexpected character {ch!r}", pos + off)
    try:
        return normalize([int(ch) for ch in tok] for tok, _ in tokens)
    except NCRooksError as exc:
        shorthand_error = exc
    try:
        return normalize([int(tok)] for tok, _ in tokens)
    except NCRooksError:
        raise ParseError(str(shorthand_error)) from shorthand_error


def _block_tokens(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    for tok in text.split("|"):
        if not tok.strip():
            raise ParseError("empty block", pos)
        tokens.append((tok, pos))
        pos += len(tok) + 1
    return tokens


def _comma_block(tok: str, pos: int) -> list[int]:
    out = []
    off = 0
    for item in tok.split(","):
        stripped = item.strip()
        if not stripped.isdigit():
            raise ParseError(f"expected a positive integer, got {item!r}", pos + off)
        out.append(int(stripped))
        off += len(item) + 1
    return out


def _normalize_parsed(blocks: list[list[int]]) -> SetPartition:
    try:
        return normalize(blocks)
    except NCRooksError as exc:
        raise ParseError(str(exc)) from exc


def format_rgf(word: Sequence[int]) -> str:
    if not word:
        return TRIVIAL_TEXT
    if max(word) <= 9:
        return "".join(map(str, word))
    return ",".join(map(str, word))


def parse_rgf(text: str) -> RGF:
    text = text.strip()
    if text in (TRIVIAL_TEXT, ""):
        return ()
    if "," in text:
        items = text.split(",")
    else:
        items = list(text)
    word = []
    pos = 0
    for item in items:
        if not item.strip().isdigit():
            raise ParseError(f"expected a positive integer, got {item!r}", pos)
        word.append(int(item))
        pos += len(item) + (1 if "," in text else 0)
    top = 0
    for i, a in enumerate(word):
        if not 1 <= a <= top + 1:
            raise InvalidRGF(f"letter {a} at position {i + 1} breaks the growth condition")
        top = max(top, a)
    return tuple(word)
