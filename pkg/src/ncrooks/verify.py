"""Exhaustive small-case checks of the partition/rook/NCSym identities.

Every suite walks its whole range, collects up to ``FAILURE_CAP``
counterexamples in canonical text form, and returns a ``VerificationReport``.
Nothing here raises on a failed identity.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .ncsym import NCSymElement, expand_p, multiply_nc, product_p, rook_image
from .partitions import (
    SetPartition,
    atomic_factor,
    enumerate_partitions,
    format_partition,
    from_rgf,
    is_atomic,
    is_rgf,
    is_unsplitable,
    restrict,
    slash,
    slash_all,
    split_all,
    to_rgf,
    unsplitable_factor,
)
from .rooks import (
    enumerate_rooks,
    is_extendable,
    is_extendable_bruteforce,
    partition_to_rook,
    rook_product,
    rook_to_json,
)

FAILURE_CAP = 100
BRUTEFORCE_MAX_N = 6
N_ZERO_NOTE = "n = 0 (the trivial partition) is excluded by convention"

SUITE_LIMITS = {
    "thm1": (1, 12),
    "corollary": (1, 8),
    "counts": (1, 12),
    "eq2": (2, 7),
    "iso": (2, 8),
    "factorization": (1, 9),
}


@dataclass
class VerificationReport:
    suite: str
    n_range: tuple[int, int]
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0
    note: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str):
        if len(self.failures) < FAILURE_CAP:
            self.failures.append(message)

    def to_dict(self) -> dict:
        out = {
            "suite": self.suite,
            "n_range": list(self.n_range),
            "checked": self.checked,
            "failures": list(self.failures),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.note:
            out["note"] = self.note
        out.update(self.extra)
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lo, hi = self.n_range
        return (
            f"{self.suite} [{lo}..{hi}] checked={self.checked} "
            f"failures={len(self.failures)} {status}"
        )


def _check_range(suite: str, value: int):
    lo, hi = SUITE_LIMITS[suite]
    if not lo <= value <= hi:
        raise ValueError(f"{suite}: max must lie in [{lo}, {hi}], got {value}")


def _timed(fn: Callable[..., VerificationReport]):
    def wrapper(*args, **kwargs) -> VerificationReport:
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed_ms = (time.perf_counter() - start) * 1000
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def verify_theorem1(max_n: int) -> VerificationReport:
    """Extendable rooks are exactly the atomic partitions, for 1 <= n <= max_n.

    For n <= 6 the linear criterion is also compared against brute force.
    """
    _check_range("thm1", max_n)
    report = VerificationReport("thm1", (1, max_n), note=N_ZERO_NOTE)
    for n in range(1, max_n + 1):
        for pi in enumerate_partitions(n):
            report.checked += 1
            rook = partition_to_rook(pi)
            ext = is_extendable(rook)
            if ext != is_atomic(pi):
                report.fail(f"{format_partition(pi)}: extendable={ext} atomic={not ext}")
            if n <= BRUTEFORCE_MAX_N and is_extendable_bruteforce(rook) != ext:
                report.fail(f"{rook_to_json(rook)}: criterion={ext} disagrees with brute force")
    return report


@_timed
def verify_corollary(max_board: int) -> VerificationReport:
    """Every rook on T_n with a one at (1, n) is extendable."""
    _check_range("corollary", max_board)
    report = VerificationReport("corollary", (1, max_board))
    for board in range(1, max_board + 1):
        for rook in enumerate_rooks(board):
            if (1, board) not in rook.ones:
                continue
            report.checked += 1
            if not is_extendable(rook):
                report.fail(f"{rook_to_json(rook)}: criterion says not extendable")
            elif board <= BRUTEFORCE_MAX_N and not is_extendable_bruteforce(rook):
                report.fail(f"{rook_to_json(rook)}: brute force finds no extension")
    return report


# -- counts ---------------------------------------------------------------


def bell_numbers(max_n: int) -> list[int]:
    """B(0..max_n) from the Bell triangle (each row starts with the last entry of the previous)."""
    bells = [1]
    row = [1]
    for _ in range(max_n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        bells.append(row[-1])
        row = nxt
    return bells[: max_n + 1]


@dataclass(frozen=True)
class CountRow:
    n: int
    bell: int
    atomic: int
    extendable: int
    unsplitable: int


@dataclass(frozen=True)
class CountTable:
    rows: tuple[CountRow, ...]

    def row(self, n: int) -> CountRow:
        return next(r for r in self.rows if r.n == n)

    def identities_hold(self) -> bool:
        return all(r.atomic == r.extendable == r.unsplitable for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "columns": ["n", "bell", "atomic", "extendable", "unsplitable"],
            "rows": [[r.n, r.bell, r.atomic, r.extendable, r.unsplitable] for r in self.rows],
        }

    def render(self) -> str:
        lines = [f"{'n':>3} {'bell':>8} {'atomic':>8} {'extendable':>10} {'unsplitable':>11}"]
        for r in self.rows:
            lines.append(
                f"{r.n:>3} {r.bell:>8} {r.atomic:>8} {r.extendable:>10} {r.unsplitable:>11}"
            )
        return "\n".join(lines)


@lru_cache(maxsize=None)
def _count_row(n: int) -> CountRow:
    bell = atomic = extendable = unsplitable = 0
    for pi in enumerate_partitions(n):
        bell += 1
        atomic += is_atomic(pi)
        extendable += is_extendable(partition_to_rook(pi))
        unsplitable += is_unsplitable(pi)
    return CountRow(n, bell, atomic, extendable, unsplitable)


def count_table(max_n: int) -> CountTable:
    _check_range("counts", max_n)
    return CountTable(tuple(_count_row(n) for n in range(1, max_n + 1)))


@_timed
def verify_counts(max_n: int) -> VerificationReport:
    """|A_n| = |E_n| = |US_n| and |Pi_n| = B(n) for 1 <= n <= max_n."""
    table = count_table(max_n)
    bells = bell_numbers(max_n)
    report = VerificationReport("counts", (1, max_n), note=N_ZERO_NOTE)
    for r in table.rows:
        report.checked += 1
        if r.bell != bells[r.n]:
            report.fail(f"n={r.n}: enumerated {r.bell} partitions, Bell triangle gives {bells[r.n]}")
        if not r.atomic == r.extendable == r.unsplitable:
            report.fail(
                f"n={r.n}: atomic={r.atomic} extendable={r.extendable} unsplitable={r.unsplitable}"
            )
    report.extra["table"] = table.to_dict()
    return report


# -- algebra --------------------------------------------------------------


@_timed
def verify_eq2(max_total_degree: int) -> VerificationReport:
    """p_pi * p_sigma = p_{pi|sigma} as polynomials in k = |pi| + |sigma| variables."""
    _check_range("eq2", max_total_degree)
    report = VerificationReport("eq2", (1, max_total_degree))
    cache: dict = {}

    def p(pi: SetPartition, k: int):
        key = (pi, k)
        if key not in cache:
            cache[key] = expand_p(pi, k)
        return cache[key]

    for total in range(1, max_total_degree + 1):
        k = total
        for a in range(total + 1):
            for pi in enumerate_partitions(a):
                for sigma in enumerate_partitions(total - a):
                    report.checked += 1
                    lhs = multiply_nc(p(pi, k), p(sigma, k))
                    if lhs != p(slash(pi, sigma), k):
                        report.fail(
                            f"({format_partition(pi)}, {format_partition(sigma)}) at k={k}"
                        )
        cache.clear()
    return report


@_timed
def verify_isomorphism(max_size: int) -> VerificationReport:
    """p_pi -> R_pi is multiplicative on basis pairs and bijective per degree."""
    _check_range("iso", max_size)
    report = VerificationReport("iso", (0, max_size))
    by_size = {n: list(enumerate_partitions(n)) for n in range(max_size + 1)}
    for n, parts in by_size.items():
        report.checked += 1
        images = {partition_to_rook(pi) for pi in parts}
        rooks = set(enumerate_rooks(n - 1))
        if len(images) != len(parts):
            report.fail(f"degree {n}: rook_image is not injective on the basis")
        if images != rooks:
            report.fail(f"degree {n}: image is not the full rook basis on T_{n - 1}")
    for a in range(max_size + 1):
        for b in range(max_size + 1 - a):
            for pi in by_size[a]:
                u = NCSymElement.of("p", pi)
                ru = rook_image(u)
                for sigma in by_size[b]:
                    report.checked += 1
                    v = NCSymElement.of("p", sigma)
                    if rook_image(product_p(u, v)) != rook_product(ru, rook_image(v)):
                        report.fail(f"({format_partition(pi)}, {format_partition(sigma)})")
    return report


# -- free factorization ---------------------------------------------------


def count_factorizations(pi: SetPartition, product: str) -> int:
    """Number of ways to cut pi into generator factors, searching every cut position.

    ``product`` is "slash" (factors atomic) or "split" (factors unsplitable).
    """
    n = pi.n
    word = to_rgf(pi)

    def piece(lo: int, hi: int) -> SetPartition | None:
        if product == "slash":
            if any(b[0] <= lo < b[-1] or b[0] <= hi < b[-1] for b in pi.blocks):
                return None
            part = restrict(pi, lo, hi)
            return part if is_atomic(part) else None
        sub = word[lo:hi]
        if not is_rgf(sub):
            return None
        part = from_rgf(sub)
        return part if is_unsplitable(part) else None

    ways = [0] * (n + 1)
    ways[n] = 1
    for lo in range(n - 1, -1, -1):
        ways[lo] = sum(ways[hi] for hi in range(lo + 1, n + 1) if piece(lo, hi) is not None)
    return ways[0]


@_timed
def verify_free_factorization(max_n: int) -> VerificationReport:
    """Unique factorization into atomic (slash) and unsplitable (split) factors."""
    _check_range("factorization", max_n)
    report = VerificationReport("factorization", (1, max_n), note=N_ZERO_NOTE)
    for n in range(1, max_n + 1):
        for pi in enumerate_partitions(n):
            report.checked += 1
            text = format_partition(pi)
            for name, factor, fold, pred in (
                ("slash", atomic_factor, slash_all, is_atomic),
                ("split", unsplitable_factor, split_all, is_unsplitable),
            ):
                factors = factor(pi)
                if fold(factors) != pi:
                    report.fail(f"{text}: {name} factors do not reproduce the input")
                if not all(pred(f) for f in factors):
                    report.fail(f"{text}: a {name} factor is not a generator")
                if pred(pi) != (len(factors) == 1):
                    report.fail(f"{text}: {name} predicate disagrees with factor count")
                ways = count_factorizations(pi, name)
                if ways != 1:
                    report.fail(f"{text}: {ways} {name} factorizations found")
    return report


SUITES: dict[str, Callable[[int], VerificationReport]] = {
    "thm1": verify_theorem1,
    "corollary": verify_corollary,
    "counts": verify_counts,
    "eq2": verify_eq2,
    "iso": verify_isomorphism,
    "factorization": verify_free_factorization,
}


def run_suite(name: str, max_value: int) -> VerificationReport:
    return SUITES[name](max_value)

