"""Independent oracles shared by the test modules.

None of these go through the RGF iterator, the cut-point helpers or the
closed-form expansions they are used to check.
"""

import itertools
from math import comb, factorial

from ncrooks.partitions import normalize


def brute_partitions(n):
    """Pi_n by inserting n into every block of each partition of [n-1], or alone."""
    if n == 0:
        return [normalize([])]
    out = []
    for pi in brute_partitions(n - 1):
        blocks = [list(b) for b in pi.blocks]
        for i in range(len(blocks)):
            out.append(normalize(blocks[:i] + [blocks[i] + [n]] + blocks[i + 1 :]))
        out.append(normalize(blocks + [[n]]))
    return out


def bell_recurrence(n):
    """B(n) from B(m+1) = sum_j C(m, j) B(j)."""
    bells = [1]
    for m in range(n):
        bells.append(sum(comb(m, j) * bells[j] for j in range(m + 1)))
    return bells[n]


def words_constant_on_blocks(pi, k):
    for word in itertools.product(range(1, k + 1), repeat=pi.n):
        if all(len({word[x - 1] for x in b}) == 1 for b in pi.blocks):
            yield word


def brute_expand(pi, k, exact):
    """Coefficient-1 support of p_pi (exact=False) or m_pi (exact=True) by scanning k^n words."""
    terms = {}
    for word in words_constant_on_blocks(pi, k):
        labels = [word[b[0] - 1] for b in pi.blocks]
        if exact and len(set(labels)) != len(labels):
            continue
        terms[word] = 1
    return terms


def mobius_closed_form(pi, sigma):
    """Partition-lattice Moebius value mu(pi, sigma) for pi <= sigma."""
    value = 1
    for big in sigma.blocks:
        c = sum(1 for b in pi.blocks if b[0] in big)
        value *= (-1) ** (c - 1) * factorial(c - 1)
    return value


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
