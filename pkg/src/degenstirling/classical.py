"""Classical Bernoulli and Euler polynomials, from their defining sums.

These are the lambda = 0 reference values.  They come straight from the
linear recurrences their generating functions force,

    sum_{k<=n} C(n+1, k) B_k(x) = (n+1) x^n
    sum_{k<n}  C(n, k)   E_k(x) + 2 E_n(x) = 2 x^n

with no power series machinery involved, so they stay independent of the
series engine they are used to check.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import _as_fraction, binomial

__all__ = ["bernoulli_polynomial", "euler_polynomial"]


@lru_cache(maxsize=None)
def _bernoulli_values(n: int, x: Fraction) -> tuple[Fraction, ...]:
    # from t e^{xt}/(e^t - 1): sum_{k<=n} C(n+1, k) B_k(x) = (n+1) x^n
    vals: list[Fraction] = []
    for m in range(n + 1):
        acc = (m + 1) * x**m
        for k in range(m):
            acc -= binomial(m + 1, k) * vals[k]
        vals.append(acc / (m + 1))
    return tuple(vals)


@lru_cache(maxsize=None)
def _euler_values(n: int, x: Fraction) -> tuple[Fraction, ...]:
    # from 2 e^{xt}/(e^t + 1): E_m(x) + sum_{k<=m} C(m, k) E_k(x) = 2 x^m
    vals: list[Fraction] = []
    for m in range(n + 1):
        acc = 2 * x**m
        for k in range(m):
            acc -= binomial(m, k) * vals[k]
        vals.append(acc / 2)
    return tuple(vals)


def bernoulli_polynomial(n: int, x) -> Fraction:
    """B_n(x); B_n(0) are the Bernoulli numbers (B_1 = -1/2)."""
    if n < 0:
        raise ValueError("bernoulli_polynomial requires n >= 0")
    return _bernoulli_values(n, _as_fraction(x))[n]


def euler_polynomial(n: int, x) -> Fraction:
    """E_n(x); E_1(x) = x - 1/2."""
    if n < 0:
        raise ValueError("euler_polynomial requires n >= 0")
    return _euler_values(n, _as_fraction(x))[n]
