"""Triangular arrays: brute-force enumeration oracles for the classical
numbers, hand-computed low rows for the degenerate ones, orthogonality,
and lambda -> 0 limits."""

from __future__ import annotations

from fractions import Fraction

import pytest

from degenstirling.exact import (
    LAMBDA,
    ONE,
    ZERO,
    LambdaPoly,
    binomial,
    factorial,
    lambda_falling_factorial,
    lambda_rising_factorial,
)
from degenstirling.triangles import (
    BASIS_KINDS,
    expand_in_basis,
    factorial_basis,
    lah,
    stirling1_classical,
    stirling1_degenerate,
    stirling1_fraction,
    stirling2_classical,
    stirling2_degenerate,
    stirling2_fraction,
    unsigned_stirling1_degenerate,
)

import oracles

L1 = LAMBDA - 1


def test_classical_second_kind_counts_set_partitions():
    for n in range(8):
        for k in range(n + 1):
            assert stirling2_fraction(n, k) == oracles.count_set_partitions(n, k)


def test_classical_first_kind_counts_permutation_cycles():
    for n in range(8):
        for k in range(n + 1):
            expect = oracles.count_cycle_permutations(n, k)
            if (n - k) % 2:
                expect = -expect
            assert stirling1_fraction(n, k) == expect


def test_classical_triangles_wrap_the_fractions():
    t1, t2 = stirling1_classical(6), stirling2_classical(6)
    for n in range(7):
        for k in range(n + 1):
            assert t1.entry(n, k) == stirling1_fraction(n, k)
            assert t2.entry(n, k) == stirling2_fraction(n, k)


def test_degenerate_hand_rows():
    t1 = stirling1_degenerate(3)
    assert t1.entry(0, 0) == ONE
    assert t1.entry(1, 1) == ONE
    assert t1.entry(2, 1) == L1
    assert t1.entry(3, 2) == 3 * L1
    assert t1.entry(3, 1) == (LAMBDA - 1) * (LAMBDA - 2)
    t2 = stirling2_degenerate(3)
    assert t2.entry(2, 1) == -L1
    assert t2.entry(3, 2) == -3 * L1
    assert t2.entry(3, 1) == (1 - LAMBDA) * (1 - 2 * LAMBDA)


def test_lah_hand_rows_and_composition():
    t = lah(6)
    assert t.entry(3, 1) == 6
    assert t.entry(3, 2) == 6
    assert t.entry(4, 2) == 36
    for n in range(7):
        assert t.entry(n, n) == ONE
        for k in range(n + 1):
            # L = |S1| . S2, the rising -> monomial -> falling chain
            expect = sum(
                (abs(stirling1_fraction(n, j)) * stirling2_fraction(j, k) for j in range(n + 1)),
                Fraction(0),
            )
            assert t.entry(n, k) == expect
            if k == 0:
                assert t.entry(n, k) == (ONE if n == 0 else ZERO)
            else:
                assert t.entry(n, k) == binomial(n - 1, k - 1) * factorial(n) / factorial(k)


def test_unsigned_degenerate_first_kind_is_the_sign_flip():
    signed = stirling1_degenerate(6)
    unsigned = unsigned_stirling1_degenerate(6)
    for n in range(7):
        for k in range(n + 1):
            v = signed.entry(n, k)
            assert unsigned.entry(n, k) == (-v if (n - k) % 2 else v)


@pytest.mark.parametrize("size", [8])
def test_degenerate_orthogonality_both_directions(size):
    t1 = stirling1_degenerate(size)
    t2 = stirling2_degenerate(size)
    for n in range(size + 1):
        for m in range(size + 1):
            a = sum((t1.entry(n, k) * t2.entry(k, m) for k in range(size + 1)), ZERO)
            b = sum((t2.entry(n, k) * t1.entry(k, m) for k in range(size + 1)), ZERO)
            expect = ONE if n == m else ZERO
            assert a == expect
            assert b == expect


def test_lambda_degree_bound():
    t1 = stirling1_degenerate(8)
    t2 = stirling2_degenerate(8)
    for n in range(9):
        for k in range(n + 1):
            assert t1.entry(n, k).degree <= n - k
            assert t2.entry(n, k).degree <= n - k


def test_lambda_zero_limits_are_classical():
    t1 = stirling1_degenerate(8)
    t2 = stirling2_degenerate(8)
    for n in range(9):
        for k in range(n + 1):
            assert t1.entry(n, k).evaluate(0) == stirling1_fraction(n, k)
            assert t2.entry(n, k).evaluate(0) == stirling2_fraction(n, k)


def test_scaling_identity_for_lambda_falling_factorials():
    # (x)_{n,lambda} = sum_k S1(n,k) lambda^(n-k) x^k
    for x in (Fraction(2), Fraction(-3, 2), Fraction(1, 5)):
        for n in range(8):
            lhs = lambda_falling_factorial(x, n)
            rhs = ZERO
            for k in range(n + 1):
                c = stirling1_fraction(n, k) * x**k
                rhs = rhs + LambdaPoly.const(c).shifted(n - k)
            assert lhs == rhs


def test_rising_falling_reflection():
    for x in (Fraction(3), Fraction(-1, 2)):
        for n in range(7):
            lhs = lambda_rising_factorial(x, n)
            rhs = lambda_falling_factorial(-x, n)
            assert lhs == (rhs if n % 2 == 0 else -rhs)


def test_factorial_basis_round_trip():
    for kind in BASIS_KINDS:
        for n in range(6):
            coeffs = factorial_basis(kind, n)
            expanded = expand_in_basis(coeffs, kind)
            expect = tuple(ONE if i == n else ZERO for i in range(n + 1))
            assert expanded == expect


def test_entry_bounds_and_mutation_helper():
    t = stirling2_degenerate(4)
    assert t.entry(3, 5) == ZERO
    assert t.entry(2, -1) == ZERO
    with pytest.raises(ValueError):
        t.entry(5, 0)
    bumped = t.with_entry(3, 2, t.entry(3, 2) + 1)
    assert bumped.entry(3, 2) == t.entry(3, 2) + 1
    assert bumped.entry(3, 1) == t.entry(3, 1)
