"""Truncated power series over the lambda-polynomial ring.

A series of order N stores the plain Taylor coefficients a_0 .. a_N of
sum a_n t^n, each a `LambdaPoly`.  The factorial bookkeeping of
exponential generating functions lives only at the boundary:
`egf_coefficient(n)` returns n! * a_n and `from_egf` divides it back out.
Working with plain coefficients keeps products and compositions to
single convolutions with no factorial shuffling in the inner loops.

All arithmetic is exact and uniformly truncated at the series order:
no operation ever consults a coefficient beyond index N, so computing
at a higher order and truncating agrees with computing at the lower
order directly.  Binary operations require equal orders and raise
ValueError otherwise; nothing is silently re-truncated.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import LAMBDA, ONE, ZERO, LambdaPoly, factorial, falling_factorial

__all__ = [
    "EgfSeries",
    "from_taylor",
    "from_egf",
    "constant",
    "monomial",
    "exp_series",
    "log_series",
    "degenerate_exp",
    "degenerate_log",
    "log_of_degenerate_exp",
]


def _as_poly(value) -> LambdaPoly:
    if isinstance(value, LambdaPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LambdaPoly.const(value)
    raise TypeError(f"expected a LambdaPoly or rational, got {type(value).__name__}")


class EgfSeries:
    """Immutable truncated series with LambdaPoly coefficients."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, coeffs, order: int | None = None):
        cs = [_as_poly(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("a series needs at least the constant coefficient")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        if len(cs) > order + 1:
            raise ValueError(f"{len(cs)} coefficients exceed order {order}")
        cs.extend([ZERO] * (order + 1 - len(cs)))
        self._order = order
        self._coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[LambdaPoly, ...]:
        return self._coeffs

    def taylor_coefficient(self, n: int) -> LambdaPoly:
        if not 0 <= n <= self._order:
            raise ValueError(f"coefficient index {n} outside order {self._order}")
        return self._coeffs[n]

    def egf_coefficient(self, n: int) -> LambdaPoly:
        """n! * a_n, the coefficient of t^n/n!."""
        return self.taylor_coefficient(n) * factorial(n)

    def _check_order(self, other: EgfSeries):
        if self._order != other._order:
            raise ValueError(f"order mismatch: {self._order} != {other._order}")

    def __add__(self, other):
        if isinstance(other, EgfSeries):
            self._check_order(other)
            return EgfSeries(
                [a + b for a, b in zip(self._coeffs, other._coeffs)], self._order
            )
        if isinstance(other, (int, Fraction, LambdaPoly)):
            out = list(self._coeffs)
            out[0] = out[0] + _as_poly(other)
            return EgfSeries(out, self._order)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (EgfSeries, int, Fraction, LambdaPoly)):
            return self + (-other if isinstance(other, EgfSeries) else -_as_poly(other))
        return NotImplemented

    def __neg__(self):
        return EgfSeries([-c for c in self._coeffs], self._order)

    def __mul__(self, other):
        if isinstance(other, EgfSeries):
            self._check_order(other)
            n = self._order
            out = [ZERO] * (n + 1)
            for i, a in enumerate(self._coeffs):
                if a.is_zero():
                    continue
                for j in range(n - i + 1):
                    b = other._coeffs[j]
                    if not b.is_zero():
                        out[i + j] = out[i + j] + a * b
            return EgfSeries(out, n)
        if isinstance(other, (int, Fraction, LambdaPoly)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, value) -> EgfSeries:
        value = _as_poly(value)
        return EgfSeries([c * value for c in self._coeffs], self._order)

    def compose(self, inner: EgfSeries) -> EgfSeries:
        """self(inner(t)), by Horner; inner must have zero constant term."""
        self._check_order(inner)
        if not inner._coeffs[0].is_zero():
            raise ValueError("composition requires the inner constant term to be 0")
        acc = constant(self._coeffs[self._order], self._order)
        for i in range(self._order - 1, -1, -1):
            acc = acc * inner + self._coeffs[i]
        return acc

    def reciprocal(self) -> EgfSeries:
        """1/self; the constant term must be a nonzero rational constant."""
        a0 = self._coeffs[0]
        if a0.is_zero() or a0.degree > 0:
            raise ValueError(
                "reciprocal requires a nonzero lambda-free constant term, "
                f"got {a0}"
            )
        inv = 1 / a0.constant_value()
        out = [LambdaPoly.const(inv)]
        neg_inv = Fraction(-1) * inv
        for n in range(1, self._order + 1):
            acc = ZERO
            for k in range(1, n + 1):
                ak = self._coeffs[k]
                if not ak.is_zero() and not out[n - k].is_zero():
                    acc = acc + ak * out[n - k]
            out.append(acc * neg_inv)
        return EgfSeries(out, self._order)

    def pow_over_factorial(self, k: int) -> EgfSeries:
        """self**k / k!, built incrementally so k can exceed the order."""
        if k < 0:
            raise ValueError("pow_over_factorial requires k >= 0")
        acc = constant(ONE, self._order)
        for i in range(1, k + 1):
            acc = acc * self * Fraction(1, i)
        return acc

    def x_power(self, x, route: str = "binomial") -> EgfSeries:
        """self**x for rational x; the constant term must be exactly 1.

        route="binomial" sums (x)_k (self - 1)^k / k!, which terminates at
        the series order because self - 1 has no constant term.
        route="deg_exp_log" computes e_{-lambda}^x(log_{-lambda}(self)),
        an independent path used for cross-checking; the two agree
        identically on every input.
        """
        if self._coeffs[0] != ONE:
            raise ValueError("x_power requires constant term 1")
        if route == "binomial":
            delta = self - 1
            acc = constant(ONE, self._order)
            pw = constant(ONE, self._order)
            for k in range(1, self._order + 1):
                pw = pw * delta * Fraction(1, k)
                c = falling_factorial(x, k)
                if c:
                    acc = acc + pw.scale(c)
            return acc
        if route == "deg_exp_log":
            inner = degenerate_log(-1, self._order).compose(self - 1)
            return degenerate_exp(x, -1, self._order).compose(inner)
        raise ValueError(f"unknown x_power route: {route!r}")

    def divided_by_t(self) -> EgfSeries:
        """Strip one factor of t; the constant term must be 0.  Order drops by 1."""
        if not self._coeffs[0].is_zero():
            raise ValueError("divided_by_t requires a zero constant term")
        if self._order == 0:
            raise ValueError("cannot reduce a series of order 0")
        return EgfSeries(self._coeffs[1:], self._order - 1)

    def truncated(self, order: int) -> EgfSeries:
        if not 0 <= order <= self._order:
            raise ValueError(f"cannot truncate order {self._order} to {order}")
        return EgfSeries(self._coeffs[: order + 1], order)

    def __eq__(self, other):
        if not isinstance(other, EgfSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._order, self._coeffs))

    def __repr__(self):
        shown = ", ".join(str(c) for c in self._coeffs[:5])
        if self._order > 4:
            shown += ", ..."
        return f"EgfSeries(order={self._order}, [{shown}])"


def from_taylor(coeffs, order: int | None = None) -> EgfSeries:
    """Series from plain Taylor coefficients, padded with zeros to the order."""
    return EgfSeries(coeffs, order)


def from_egf(coeffs, order: int | None = None) -> EgfSeries:
    """Series from EGF coefficients c_n, so a_n = c_n / n!."""
    cs = [_as_poly(c) * Fraction(1, int(factorial(n))) for n, c in enumerate(coeffs)]
    return EgfSeries(cs, order)


def constant(value, order: int) -> EgfSeries:
    return EgfSeries([_as_poly(value)], order)


def monomial(order: int, power: int = 1, coeff=1) -> EgfSeries:
    """coeff * t**power as a series of the given order."""
    if not 0 <= power <= order:
        raise ValueError("monomial power must lie within the order")
    cs = [ZERO] * (power + 1)
    cs[power] = _as_poly(coeff)
    return EgfSeries(cs, order)


def exp_series(order: int) -> EgfSeries:
    """exp(t) = sum t^n / n!."""
    return EgfSeries([Fraction(1, int(factorial(n))) * ONE for n in range(order + 1)], order)


def log_series(order: int) -> EgfSeries:
    """log(1 + t) = sum (-1)^(n-1) t^n / n."""
    cs = [ZERO] + [LambdaPoly.const(Fraction((-1) ** (n - 1), n)) for n in range(1, order + 1)]
    return EgfSeries(cs, order)


def _sign_lambda(sign: int) -> LambdaPoly:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return LAMBDA if sign == 1 else -LAMBDA


def degenerate_exp(x, sign: int, order: int) -> EgfSeries:
    """e_{s*lambda}^x(t) = sum (x)_{n, s*lambda} t^n / n!  for s = sign.

    x may be a rational or a LambdaPoly.  At lambda = 0 this is exp(x t),
    and degenerate_exp(1, 1, N) is the compositional inverse of
    degenerate_log(1, N) - both round trips are exact to order N.
    """
    s_lam = _sign_lambda(sign)
    xp = x if isinstance(x, LambdaPoly) else _as_poly(x)
    cs = [ONE]
    prod = ONE
    for n in range(1, order + 1):
        prod = prod * (xp - s_lam * (n - 1))
        cs.append(prod * Fraction(1, int(factorial(n))))
    return EgfSeries(cs, order)


def degenerate_log(sign: int, order: int) -> EgfSeries:
    """log_{s*lambda}(1 + t) = ((1+t)^(s*lambda) - 1)/(s*lambda) for s = sign.

    The coefficient of t^n/n! collapses in Q[lambda] to the product
    (s*lambda - 1)(s*lambda - 2)...(s*lambda - (n-1)), so the series is
    polynomial in lambda with no division left over.  At lambda = 0 it
    reduces to log(1 + t).
    """
    s_lam = _sign_lambda(sign)
    cs = [ZERO]
    prod = ONE
    for n in range(1, order + 1):
        if n >= 2:
            prod = prod * (s_lam - (n - 1))
        cs.append(prod * Fraction(1, int(factorial(n))))
    return EgfSeries(cs, order)


def log_of_degenerate_exp(order: int) -> EgfSeries:
    """log e_lambda(t) = (1/lambda) log(1 + lambda t) = sum (-1)^(n-1) lambda^(n-1) t^n / n."""
    cs: list[LambdaPoly] = [ZERO]
    for n in range(1, order + 1):
        cs.append(LambdaPoly.const(Fraction((-1) ** (n - 1), n)).shifted(n - 1))
    return EgfSeries(cs, order)
