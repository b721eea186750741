"""Exact scalars and dense polynomials in the parameter lambda.

The scalar type is `fractions.Fraction`, re-exported as `Rational`: it is
arbitrary precision, always in lowest terms with a positive denominator,
and its string form is exactly the "p/q" (or bare "p") format used by the
emitters.  `LambdaPoly` is a dense univariate polynomial over the
rationals in lambda, the coefficient ring for every series and triangle
in this package.

Everything here is immutable and every operation is pure, so values may
be shared freely across threads.  Floats are rejected at the boundary;
no floating point arithmetic happens anywhere downstream of this module.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

__all__ = [
    "Rational",
    "LambdaPoly",
    "ZERO",
    "ONE",
    "LAMBDA",
    "parse_rational",
    "format_rational",
    "factorial",
    "binomial",
    "falling_factorial",
    "rising_factorial",
    "lambda_falling_factorial",
    "lambda_rising_factorial",
]

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into a Fraction.  Anything else is a ValueError."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    return str(_as_fraction(value))


def _as_fraction(value) -> Fraction:
    # floats are refused on purpose: exactness is the whole point
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def factorial(n: int) -> Fraction:
    if n < 0:
        raise ValueError("factorial requires n >= 0")
    return Fraction(math.factorial(n))


def falling_factorial(x, n: int) -> Fraction:
    """(x)_n = x (x-1) ... (x-n+1), the empty product for n = 0."""
    if n < 0:
        raise ValueError("falling_factorial requires n >= 0")
    x = _as_fraction(x)
    out = Fraction(1)
    for j in range(n):
        out *= x - j
    return out


def rising_factorial(x, n: int) -> Fraction:
    """<x>_n = x (x+1) ... (x+n-1), the empty product for n = 0."""
    if n < 0:
        raise ValueError("rising_factorial requires n >= 0")
    x = _as_fraction(x)
    out = Fraction(1)
    for j in range(n):
        out *= x + j
    return out


def binomial(n, k: int) -> Fraction:
    """C(n, k) = (n)_k / k!.

    Defined through the falling factorial, so n may be any integer (or
    rational): C(-1, 0) = 1, C(l-1, l) = 0 for l >= 1, and so on.
    """
    if k < 0:
        raise ValueError("binomial requires k >= 0")
    return falling_factorial(n, k) / factorial(k)


class LambdaPoly:
    """Dense polynomial in lambda with Fraction coefficients.

    Coefficients are stored lowest power first with trailing zeros
    stripped, so equal polynomials have identical coefficient tuples and
    the zero polynomial is the empty tuple.  Instances are immutable;
    arithmetic returns new values.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def const(cls, value) -> LambdaPoly:
        return cls((value,))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree in lambda; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def constant_value(self) -> Fraction:
        """The value of a lambda-free polynomial; error if degree > 0."""
        if len(self._coeffs) > 1:
            raise ValueError(f"not a constant polynomial: {self}")
        return self._coeffs[0] if self._coeffs else Fraction(0)

    @staticmethod
    def _wrap(other):
        if isinstance(other, LambdaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LambdaPoly((other,))
        return None

    def __add__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LambdaPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return LambdaPoly(tuple(-c for c in self._coeffs))

    def __mul__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        if len(a) == 1:
            return LambdaPoly(tuple(a[0] * c for c in b))
        if len(b) == 1:
            return LambdaPoly(tuple(c * b[0] for c in a))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj != 0:
                    out[i + j] += ai * bj
        return LambdaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers take a nonnegative integer exponent")
        out = ONE
        for _ in range(exponent):
            out = out * self
        return out

    def evaluate(self, value) -> Fraction:
        """Evaluate at a rational lambda (Horner); a ring homomorphism."""
        value = _as_fraction(value)
        out = Fraction(0)
        for c in reversed(self._coeffs):
            out = out * value + c
        return out

    def negate_lambda(self) -> LambdaPoly:
        """Substitute lambda -> -lambda.  An involution."""
        return LambdaPoly(tuple(-c if i % 2 else c for i, c in enumerate(self._coeffs)))

    def shifted(self, k: int) -> LambdaPoly:
        """Multiply by lambda**k."""
        if k < 0:
            raise ValueError("shifted requires k >= 0")
        if not self._coeffs:
            return ZERO
        return LambdaPoly((Fraction(0),) * k + self._coeffs)

    def to_coeff_strings(self) -> list[str]:
        """Serialize as coefficient strings, lowest power first; zero -> ["0"]."""
        if not self._coeffs:
            return ["0"]
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_coeff_strings(cls, items) -> LambdaPoly:
        return cls(tuple(parse_rational(s) for s in items))

    def __eq__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        # constants hash like their Fraction value, keeping eq/hash consistent
        if len(self._coeffs) <= 1:
            return hash(self._coeffs[0] if self._coeffs else Fraction(0))
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        return f"LambdaPoly({list(self._coeffs)!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "λ" if mag == 1 else f"{mag}*λ"
            else:
                body = f"λ^{i}" if mag == 1 else f"{mag}*λ^{i}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)


ZERO = LambdaPoly()
ONE = LambdaPoly((1,))
LAMBDA = LambdaPoly((0, 1))


def lambda_falling_factorial(x, n: int) -> LambdaPoly:
    """(x)_{n,lambda} = x (x - lambda) ... (x - (n-1) lambda).

    x may be a rational or a LambdaPoly; the result lives in Q[lambda].
    Evaluating at lambda = 1 gives (x)_n, at lambda = 0 gives x**n.
    """
    if n < 0:
        raise ValueError("lambda_falling_factorial requires n >= 0")
    xp = x if isinstance(x, LambdaPoly) else LambdaPoly.const(x)
    out = ONE
    for j in range(n):
        out = out * (xp - LAMBDA * j)
    return out


def lambda_rising_factorial(x, n: int) -> LambdaPoly:
    """<x>_{n,lambda} = x (x + lambda) ... (x + (n-1) lambda)."""
    if n < 0:
        raise ValueError("lambda_rising_factorial requires n >= 0")
    xp = x if isinstance(x, LambdaPoly) else LambdaPoly.const(x)
    out = ONE
    for j in range(n):
        out = out * (xp + LAMBDA * j)
    return out
