"""Naive reference implementations used only by the tests.

Everything here is deliberately written the slow, obvious way, without
touching the package's series or triangle code, so agreement between
the two is evidence rather than tautology.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations


def series_multiply(a, b, order):
    """Truncated Cauchy product of two Taylor coefficient lists."""
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        for j, bj in enumerate(b[: order + 1]):
            if i + j <= order:
                out[i + j] += ai * bj
    return out


def series_compose(outer, inner, order):
    """Naive composition sum_k outer[k] * inner^k, inner[0] must be 0."""
    assert inner[0] == 0
    out = [Fraction(0)] * (order + 1)
    power = [Fraction(1)] + [Fraction(0)] * order
    for k, ck in enumerate(outer[: order + 1]):
        if k:
            power = series_multiply(power, inner, order)
        for i, pi in enumerate(power):
            out[i] += ck * pi
    return out


def count_set_partitions(n, k):
    """Number of partitions of an n-set into exactly k nonempty blocks,
    by direct recursive placement of elements into blocks."""
    if n == 0:
        return 1 if k == 0 else 0

    def place(i, blocks):
        if i == n:
            return 1 if len(blocks) == k else 0
        total = 0
        for b in range(len(blocks)):
            blocks[b].append(i)
            total += place(i + 1, blocks)
            blocks[b].pop()
        if len(blocks) < k:
            blocks.append([i])
            total += place(i + 1, blocks)
            blocks.pop()
        return total

    return place(0, [])


def _cycle_count(perm):
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return cycles


def count_cycle_permutations(n, k):
    """Number of permutations of n elements with exactly k cycles, by
    brute-force enumeration.  Keep n small."""
    if n == 0:
        return 1 if k == 0 else 0
    return sum(1 for p in permutations(range(n)) if _cycle_count(p) == k)
