"""Truncated series engine: arithmetic against naive oracles, the
exp/log inverse pairs in both the ordinary and degenerate forms, and
the two MGF^x routes."""

from __future__ import annotations

from fractions import Fraction

import pytest

from degenstirling.exact import LAMBDA, ONE, ZERO, LambdaPoly
from degenstirling.series import (
    EgfSeries,
    constant,
    degenerate_exp,
    degenerate_log,
    exp_series,
    from_egf,
    from_taylor,
    log_of_degenerate_exp,
    log_series,
    monomial,
)

import oracles

N = 10


def one_plus_t(order: int) -> EgfSeries:
    return from_taylor([ONE, ONE], order)


def t_series(order: int) -> EgfSeries:
    return monomial(order)


def test_constructors_and_coefficients():
    f = from_egf([ONE, ONE, LambdaPoly.const(Fraction(2))], 4)
    assert f.taylor_coefficient(2) == Fraction(1)
    assert f.egf_coefficient(2) == Fraction(2)
    assert f.taylor_coefficient(4) == ZERO
    with pytest.raises(ValueError):
        f.taylor_coefficient(5)
    with pytest.raises(ValueError):
        from_taylor([ONE, ONE], 0)


def test_multiplication_matches_naive_oracle():
    # lambda evaluated at 2/3 so the oracle runs over plain fractions
    lam = Fraction(2, 3)
    a = from_taylor([ONE, LAMBDA, LambdaPoly.const(Fraction(1, 2)), LAMBDA * LAMBDA], N)
    b = from_taylor([LambdaPoly.const(Fraction(-1)), ONE, LAMBDA + 1], N)
    prod = a * b
    av = [a.taylor_coefficient(i).evaluate(lam) for i in range(N + 1)]
    bv = [b.taylor_coefficient(i).evaluate(lam) for i in range(N + 1)]
    expect = oracles.series_multiply(av, bv, N)
    got = [prod.taylor_coefficient(i).evaluate(lam) for i in range(N + 1)]
    assert got == expect


def test_composition_matches_naive_oracle():
    lam = Fraction(1, 5)
    outer = from_taylor([ONE, LAMBDA, LambdaPoly.const(Fraction(1, 3)), ONE], N)
    inner = from_taylor([ZERO, ONE, LAMBDA, LambdaPoly.const(Fraction(2))], N)
    comp = outer.compose(inner)
    ov = [outer.taylor_coefficient(i).evaluate(lam) for i in range(N + 1)]
    iv = [inner.taylor_coefficient(i).evaluate(lam) for i in range(N + 1)]
    expect = oracles.series_compose(ov, iv, N)
    got = [comp.taylor_coefficient(i).evaluate(lam) for i in range(N + 1)]
    assert got == expect
    with pytest.raises(ValueError):
        outer.compose(one_plus_t(N))


def test_ordinary_exp_log_inverse_pair():
    assert exp_series(N).compose(log_series(N)) == one_plus_t(N)
    assert log_series(N).compose(exp_series(N) - 1) == t_series(N)


@pytest.mark.parametrize("sign", [1, -1])
def test_degenerate_exp_log_inverse_pair(sign):
    e = degenerate_exp(1, sign, N)
    lg = degenerate_log(sign, N)
    assert e.compose(lg) == one_plus_t(N)
    assert lg.compose(e - 1) == t_series(N)


def test_degenerate_log_egf_coefficients():
    lg = degenerate_log(1, N)
    assert lg.egf_coefficient(1) == ONE
    assert lg.egf_coefficient(2) == LAMBDA - 1
    assert lg.egf_coefficient(3) == (LAMBDA - 1) * (LAMBDA - 2)


def test_log_of_degenerate_exp():
    # log e_lambda(t) = (1/lambda) log(1 + lambda t); taylor n = (-1)^(n-1) lambda^(n-1)/n
    lg = log_of_degenerate_exp(N)
    assert lg.taylor_coefficient(1) == ONE
    assert lg.taylor_coefficient(2) == -LAMBDA * Fraction(1, 2)
    assert lg.taylor_coefficient(3) == LAMBDA * LAMBDA * Fraction(1, 3)
    # exponentiating it recovers the degenerate exponential
    assert exp_series(N).compose(lg) == degenerate_exp(1, 1, N)


def test_degenerate_exp_reduces_to_exp_at_lambda_zero():
    e = degenerate_exp(1, 1, N)
    plain = exp_series(N)
    for n in range(N + 1):
        assert e.taylor_coefficient(n).evaluate(0) == plain.taylor_coefficient(n).constant_value()


def test_reciprocal_round_trip():
    for f in (exp_series(N), one_plus_t(N), constant(ONE, N) - monomial(N)):
        assert f * f.reciprocal() == constant(ONE, N)
    with pytest.raises(ValueError):
        t_series(N).reciprocal()
    with pytest.raises(ValueError):
        from_taylor([LAMBDA, ONE], N).reciprocal()


def test_pow_over_factorial():
    f = exp_series(N) - 1
    acc = constant(ONE, N)
    for k in range(4):
        assert f.pow_over_factorial(k) == acc
        acc = acc * f * Fraction(1, k + 1)


def test_x_power_routes_agree():
    f = degenerate_exp(1, 1, N)
    for x in (Fraction(0), Fraction(1), Fraction(-2), Fraction(1, 3), Fraction(5, 2)):
        assert f.x_power(x, route="binomial") == f.x_power(x, route="deg_exp_log")
    with pytest.raises(ValueError):
        f.x_power(Fraction(1), route="nope")
    with pytest.raises(ValueError):
        (exp_series(N) + 1).x_power(Fraction(2))


def test_x_power_of_exp_is_exp_of_scaled_argument():
    f = exp_series(N)
    x = Fraction(7, 3)
    expect = from_egf([LambdaPoly.const(x**n) for n in range(N + 1)], N)
    assert f.x_power(x) == expect


def test_x_power_is_a_homomorphism_in_x():
    f = from_taylor([ONE, ONE, LAMBDA, LambdaPoly.const(Fraction(1, 4))], 8)
    x, y = Fraction(3, 2), Fraction(-1, 3)
    assert f.x_power(x) * f.x_power(y) == f.x_power(x + y)
    assert f.x_power(Fraction(1)) == f
    assert f.x_power(Fraction(0)) == constant(ONE, 8)


def test_truncation_and_division_by_t():
    f = exp_series(N)
    g = f.truncated(4)
    assert g.order == 4
    for n in range(5):
        assert g.taylor_coefficient(n) == f.taylor_coefficient(n)
    g = f.truncated(N - 1)
    padded = from_taylor([g.taylor_coefficient(i) for i in range(N)], N)
    assert (monomial(N) * padded).divided_by_t() == g
    with pytest.raises(ValueError):
        one_plus_t(N).divided_by_t()


def test_order_mismatch_is_an_error():
    with pytest.raises(ValueError):
        exp_series(4) + exp_series(5)
    with pytest.raises(ValueError):
        exp_series(4) * exp_series(5)
