"""Symmetric functions in noncommuting variables, truncated to k variables.

Polynomials are sparse maps from index words ``(i_1, ..., i_n)`` to integer
coefficients; the word stands for the noncommutative monomial
``x_{i_1} x_{i_2} ... x_{i_n}``.  Formal elements of NCSym are kept as
integer combinations of set partitions tagged with the basis they are
written in, ``"p"`` (power sums) or ``"m"`` (monomials).
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import BasisMismatch, NCRooksError, SizeMismatch, VariableCountMismatch
from .partitions import (
    TRIVIAL,
    SetPartition,
    enumerate_partitions,
    from_rgf,
    slash,
    to_rgf,
)
from .rooks import RookAlgebraElement, partition_to_rook

Word = tuple[int, ...]

BASES = ("p", "m")


class NCPolynomial:
    """Integer combination of noncommutative monomials in x_1, ..., x_k."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[Word, int] | None = None):
        if k < 1:
            raise ValueError("k must be positive")
        self.k = k
        self.terms: dict[Word, int] = {}
        for word, c in (terms or {}).items():
            if not c:
                continue
            word = tuple(word)
            if any(not 1 <= i <= k for i in word):
                raise ValueError(f"monomial {word} uses a variable outside x_1..x_{k}")
            self.terms[word] = c

    def __len__(self) -> int:
        return len(self.terms)

    def support(self) -> set[Word]:
        return set(self.terms)

    def _check(self, other: NCPolynomial):
        if self.k != other.k:
            raise VariableCountMismatch(f"k = {self.k} vs k = {other.k}")

    def __add__(self, other: NCPolynomial) -> NCPolynomial:
        self._check(other)
        acc = defaultdict(int, self.terms)
        for w, c in other.terms.items():
            acc[w] += c
        return NCPolynomial(self.k, acc)

    def __neg__(self) -> NCPolynomial:
        return NCPolynomial(self.k, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: NCPolynomial) -> NCPolynomial:
        return self + (-other)

    def __rmul__(self, scalar: int) -> NCPolynomial:
        return NCPolynomial(self.k, {w: scalar * c for w, c in self.terms.items()})

    def __mul__(self, other: NCPolynomial) -> NCPolynomial:
        return multiply_nc(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __repr__(self) -> str:
        return f"NCPolynomial(k={self.k}, {format_polynomial(self)})"

    def __str__(self) -> str:
        return format_polynomial(self)


def polynomial_sum(polys: Iterable[NCPolynomial], k: int) -> NCPolynomial:
    acc: dict[Word, int] = defaultdict(int)
    for f in polys:
        if f.k != k:
            raise VariableCountMismatch(f"k = {f.k} vs k = {k}")
        for w, c in f.terms.items():
            acc[w] += c
    return NCPolynomial(k, acc)


def multiply_nc(f: NCPolynomial, g: NCPolynomial) -> NCPolynomial:
    """Bilinear product; monomials multiply by concatenating index words."""
    f._check(g)
    acc: dict[Word, int] = defaultdict(int)
    for u, a in f.terms.items():
        for v, b in g.terms.items():
            acc[u + v] += a * b
    return NCPolynomial(f.k, acc)


def monomial(*indices: int, k: int | None = None) -> NCPolynomial:
    return NCPolynomial(k if k is not None else max(indices, default=1), {indices: 1})


def type_partition(indices: Sequence[int]) -> SetPartition:
    """Positions j, l share a block iff the monomial has the same variable there."""
    relabel: dict[int, int] = {}
    word = []
    for i in indices:
        word.append(relabel.setdefault(i, len(relabel) + 1))
    return from_rgf(word)


def _monomials_from_labels(pi: SetPartition, labelings: Iterable[tuple[int, ...]]) -> dict:
    block_of = [a - 1 for a in to_rgf(pi)]
    return {tuple(lab[b] for b in block_of): 1 for lab in labelings}


def expand_m(pi: SetPartition, k: int) -> NCPolynomial:
    """m_pi: monomials whose type partition is exactly pi (blocks get distinct variables)."""
    labelings = itertools.permutations(range(1, k + 1), len(pi.blocks))
    return NCPolynomial(k, _monomials_from_labels(pi, labelings))


def expand_p(pi: SetPartition, k: int) -> NCPolynomial:
    """p_pi: monomials constant on each block of pi (type partition coarser than pi)."""
    labelings = itertools.product(range(1, k + 1), repeat=len(pi.blocks))
    return NCPolynomial(k, _monomials_from_labels(pi, labelings))


def permute_variables(f: NCPolynomial, g: Sequence[int]) -> NCPolynomial:
    """Apply g in S_k, given in one-line notation, via x_i -> x_{g^{-1}(i)}."""
    if sorted(g) != list(range(1, f.k + 1)):
        raise ValueError(f"{tuple(g)} is not a permutation of [{f.k}]")
    inverse = [0] * (f.k + 1)
    for i, gi in enumerate(g, start=1):
        inverse[gi] = i
    return NCPolynomial(f.k, {tuple(inverse[i] for i in w): c for w, c in f.terms.items()})


# -- change of basis ------------------------------------------------------


def canonical_order(n: int) -> tuple[SetPartition, ...]:
    """Pi_n by decreasing block count, ties in RGF-lexicographic order."""
    return tuple(sorted(enumerate_partitions(n), key=lambda p: -len(p.blocks)))


def coarsenings(pi: SetPartition) -> list[SetPartition]:
    """Every sigma >= pi, obtained by merging blocks along a partition of the blocks."""
    out = []
    for merge in enumerate_partitions(len(pi.blocks)):
        blocks = [sorted(x for b in group for x in pi.blocks[b - 1]) for group in merge.blocks]
        blocks.sort(key=lambda b: b[0])
        out.append(SetPartition(pi.n, tuple(map(tuple, blocks))))
    return out


@dataclass(frozen=True)
class BasisMatrix:
    """Square integer matrix indexed by ``order``, stored as sparse rows."""

    n: int
    order: tuple[SetPartition, ...]
    rows: tuple[dict[int, int], ...] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.order)

    def index(self, pi: SetPartition) -> int:
        return _order_index(self.n)[pi]

    def entry(self, pi: SetPartition, sigma: SetPartition) -> int:
        return self.rows[self.index(pi)].get(self.index(sigma), 0)

    def dense(self) -> list[list[int]]:
        out = [[0] * self.size for _ in range(self.size)]
        for i, row in enumerate(self.rows):
            for j, c in row.items():
                out[i][j] = c
        return out

    def is_unit_upper_triangular(self) -> bool:
        return all(
            row.get(i) == 1 and all(j >= i for j in row) for i, row in enumerate(self.rows)
        )

    def __matmul__(self, other: BasisMatrix) -> BasisMatrix:
        if self.order != other.order:
            raise SizeMismatch("basis matrices are indexed differently")
        rows = []
        for row in self.rows:
            acc: dict[int, int] = defaultdict(int)
            for l, a in row.items():
                for j, b in other.rows[l].items():
                    acc[j] += a * b
            rows.append({j: c for j, c in acc.items() if c})
        return BasisMatrix(self.n, self.order, tuple(rows))

    def is_identity(self) -> bool:
        return all(row == {i: 1} for i, row in enumerate(self.rows))


@lru_cache(maxsize=None)
def _order_index(n: int) -> dict[SetPartition, int]:
    return {pi: i for i, pi in enumerate(canonical_order(n))}


@lru_cache(maxsize=16)
def zeta_matrix(n: int) -> BasisMatrix:
    """Entry (pi, sigma) is 1 iff sigma >= pi, so row pi expands p_pi in the m basis."""
    order = canonical_order(n)
    index = _order_index(n)
    rows = tuple({index[s]: 1 for s in coarsenings(pi)} for pi in order)
    return BasisMatrix(n, order, rows)


@lru_cache(maxsize=16)
def mu_matrix(n: int) -> BasisMatrix:
    """Exact inverse of zeta_matrix(n) by back-substitution, last row first."""
    zeta = zeta_matrix(n)
    size = zeta.size
    inv: list[dict[int, int]] = [{} for _ in range(size)]
    for i in range(size - 1, -1, -1):
        acc: dict[int, int] = defaultdict(int)
        acc[i] = 1
        for l, u in zeta.rows[i].items():
            if l == i:
                continue
            for j, x in inv[l].items():
                acc[j] -= u * x
        inv[i] = {j: c for j, c in acc.items() if c}
    return BasisMatrix(n, zeta.order, tuple(inv))


# -- formal elements ------------------------------------------------------


class NCSymElement:
    """Integer combination of p_pi or m_pi, possibly mixing degrees."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[SetPartition, int] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.terms = {pi: c for pi, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, basis: str = "p") -> NCSymElement:
        return cls(basis, {TRIVIAL: 1})

    @classmethod
    def of(cls, basis: str, pi: SetPartition, coeff: int = 1) -> NCSymElement:
        return cls(basis, {pi: coeff})

    def __add__(self, other: NCSymElement) -> NCSymElement:
        if self.basis != other.basis:
            raise BasisMismatch(f"{self.basis} vs {other.basis}")
        acc = defaultdict(int, self.terms)
        for pi, c in other.terms.items():
            acc[pi] += c
        return NCSymElement(self.basis, acc)

    def __rmul__(self, scalar: int) -> NCSymElement:
        return NCSymElement(self.basis, {pi: scalar * c for pi, c in self.terms.items()})

    def __mul__(self, other: NCSymElement) -> NCSymElement:
        return product(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCSymElement):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __repr__(self) -> str:
        items = sorted(self.terms.items(), key=lambda t: (t[0].n, to_rgf(t[0])))
        inner = " + ".join(f"{c}*{self.basis}[{pi}]" for pi, c in items)
        return f"NCSymElement({inner or '0'})"


def product_p(u: NCSymElement, v: NCSymElement) -> NCSymElement:
    """p_pi * p_sigma = p_{pi|sigma}, extended bilinearly."""
    if u.basis != "p" or v.basis != "p":
        raise BasisMismatch("product_p needs both operands in the p basis")
    acc: dict[SetPartition, int] = defaultdict(int)
    for pi, a in u.terms.items():
        for sigma, b in v.terms.items():
            acc[slash(pi, sigma)] += a * b
    return NCSymElement("p", acc)


def product(u: NCSymElement, v: NCSymElement) -> NCSymElement:
    """Product in u's basis; m-basis operands are routed through the p basis."""
    if u.basis != v.basis:
        raise BasisMismatch(f"{u.basis} vs {v.basis}")
    if u.basis == "p":
        return product_p(u, v)
    return to_basis(product_p(to_basis(u, "p"), to_basis(v, "p")), "m")


def to_basis(u: NCSymElement, target: str) -> NCSymElement:
    """Rewrite u in the target basis, one degree at a time."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if u.basis == target:
        return NCSymElement(target, u.terms)
    make = zeta_matrix if u.basis == "p" else mu_matrix
    acc: dict[SetPartition, int] = defaultdict(int)
    for pi, c in u.terms.items():
        if pi.n == 0:
            acc[pi] += c
            continue
        mat = make(pi.n)
        for j, x in mat.rows[mat.index(pi)].items():
            acc[mat.order[j]] += c * x
    return NCSymElement(target, acc)


def expand(u: NCSymElement, k: int) -> NCPolynomial:
    """Truncated polynomial of a formal element (degree-0 part is the empty word)."""
    basis_fn = expand_p if u.basis == "p" else expand_m
    return polynomial_sum((c * basis_fn(pi, k) for pi, c in u.terms.items()), k)


def rook_image(u: NCSymElement) -> RookAlgebraElement:
    """The algebra isomorphism p_pi -> R_pi."""
    if u.basis != "p":
        raise BasisMismatch("rook_image is defined on the p basis")
    return RookAlgebraElement({partition_to_rook(pi): c for pi, c in u.terms.items()})


# -- rendering ------------------------------------------------------------


def _render_word(word: Word) -> str:
    return "*".join(f"x{i}" for i in word) if word else "1"


def format_polynomial(f: NCPolynomial) -> str:
    if not f.terms:
        return "0"
    parts = []
    for word in sorted(f.terms):
        c = f.terms[word]
        mono = _render_word(word)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not word:
            body = str(mag)
        else:
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def polynomial_to_dict(f: NCPolynomial) -> dict:
    return {
        "k": f.k,
        "terms": [{"indices": list(w), "coeff": f.terms[w]} for w in sorted(f.terms)],
    }


def polynomial_to_json(f: NCPolynomial) -> str:
    return json.dumps(polynomial_to_dict(f), separators=(",", ":"))


def polynomial_from_dict(data: dict) -> NCPolynomial:
    try:
        return NCPolynomial(
            data["k"], {tuple(t["indices"]): t["coeff"] for t in data["terms"]}
        )
    except (KeyError, TypeError) as exc:
        raise NCRooksError(f"malformed polynomial JSON: {exc}") from exc
