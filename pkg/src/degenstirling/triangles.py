"""Stirling-type triangles and the factorial bases that define them.

Every triangle family here is produced by two genuinely different
computations and the builders refuse to return anything the two routes
disagree on:

* a generating-function route, extracting EGF coefficients of
  (base series)^k / k!, and
* a basis-conversion route, expanding one factorial polynomial family
  in another by monic leading-term reduction (no division involved).

Classical triangles come from their two-term recurrences instead, with
the GF/basis checks exercised in the test suite.  Entries are
`LambdaPoly` values (lambda-free polynomials for the classical
families), rows are indexed 0..size, and everything is immutable and
memoized per (family, size).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

from .exact import LAMBDA, ONE, ZERO, LambdaPoly, binomial, factorial
from .series import EgfSeries, constant, degenerate_exp, degenerate_log

__all__ = [
    "Triangle",
    "factorial_basis",
    "expand_in_basis",
    "stirling1_classical",
    "stirling2_classical",
    "stirling1_degenerate",
    "stirling2_degenerate",
    "lah",
    "unsigned_stirling1_degenerate",
    "stirling1_fraction",
    "stirling2_fraction",
]

BASIS_KINDS = ("falling", "rising", "lambda-falling", "lambda-rising")


@dataclass(frozen=True)
class Triangle:
    """Lower-triangular table T(n, k), 0 <= k <= n <= size."""

    family: str
    size: int
    rows: tuple[tuple[LambdaPoly, ...], ...]
    rv: str | None = None

    def entry(self, n: int, k: int) -> LambdaPoly:
        if not 0 <= n <= self.size:
            raise ValueError(f"row {n} outside triangle of size {self.size}")
        if k < 0 or k > n:
            return ZERO
        return self.rows[n][k]

    def with_entry(self, n: int, k: int, value: LambdaPoly) -> Triangle:
        """Copy with one entry replaced; used to inject faults in tests."""
        if not (0 <= k <= n <= self.size):
            raise ValueError("entry outside the triangle")
        rows = [list(r) for r in self.rows]
        rows[n][k] = value
        return replace(self, rows=tuple(tuple(r) for r in rows))


def _basis_step(kind: str, j: int) -> LambdaPoly:
    # additive constant of the j-th linear factor (x + step)
    if kind == "falling":
        return LambdaPoly.const(-j)
    if kind == "rising":
        return LambdaPoly.const(j)
    if kind == "lambda-falling":
        return LAMBDA * (-j)
    if kind == "lambda-rising":
        return LAMBDA * j
    raise ValueError(f"unknown factorial basis kind: {kind!r}")


@lru_cache(maxsize=None)
def factorial_basis(kind: str, n: int) -> tuple[LambdaPoly, ...]:
    """Monomial coefficients (by x power) of the degree-n basis polynomial.

    kind "falling" gives (x)_n, "rising" <x>_n, "lambda-falling"
    (x)_{n,lambda}, "lambda-rising" <x>_{n,lambda}.  All are monic in x.
    """
    if kind not in BASIS_KINDS:
        raise ValueError(f"unknown factorial basis kind: {kind!r}")
    if n < 0:
        raise ValueError("basis degree must be >= 0")
    if n == 0:
        return (ONE,)
    prev = factorial_basis(kind, n - 1)
    step = _basis_step(kind, n - 1)
    out = [ZERO] * (n + 1)
    for i, p in enumerate(prev):
        out[i + 1] = out[i + 1] + p
        if not step.is_zero():
            out[i] = out[i] + p * step
    return tuple(out)


def expand_in_basis(coeffs_by_power, kind: str) -> tuple[LambdaPoly, ...]:
    """Coefficients of a polynomial in x (monomial coeffs given lowest
    power first) with respect to the chosen factorial basis.

    The basis polynomials are monic, so the expansion is a pure
    leading-term strip: subtract c_d * basis(d) and descend.
    """
    work = [c if isinstance(c, LambdaPoly) else LambdaPoly.const(c) for c in coeffs_by_power]
    out = [ZERO] * len(work)
    for d in range(len(work) - 1, -1, -1):
        c = work[d]
        out[d] = c
        if not c.is_zero() and d > 0:
            base = factorial_basis(kind, d)
            for i in range(d):
                if not base[i].is_zero():
                    work[i] = work[i] - c * base[i]
    return tuple(out)


def _rows_from_powers(base: EgfSeries, size: int, signed: bool = False):
    """T(n, k) = n! [t^n] base^k / k!, with an optional (-1)^(n-k) unwrap."""
    cols = [constant(ONE, base.order)]
    for k in range(1, size + 1):
        cols.append(cols[-1] * base * Fraction(1, k))
    rows = []
    for n in range(size + 1):
        row = []
        for k in range(n + 1):
            v = cols[k].egf_coefficient(n)
            if signed and (n - k) % 2:
                v = -v
            row.append(v)
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def _stirling1_fraction_rows(size: int) -> tuple[tuple[Fraction, ...], ...]:
    # S1(n+1, k) = S1(n, k-1) - n S1(n, k)
    rows = [(Fraction(1),)]
    for n in range(size):
        prev = rows[n]
        row = []
        for k in range(n + 2):
            left = prev[k - 1] if 1 <= k <= n + 1 else Fraction(0)
            right = prev[k] if k <= n else Fraction(0)
            row.append(left - n * right)
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def _stirling2_fraction_rows(size: int) -> tuple[tuple[Fraction, ...], ...]:
    # S2(n+1, k) = S2(n, k-1) + k S2(n, k)
    rows = [(Fraction(1),)]
    for n in range(size):
        prev = rows[n]
        row = []
        for k in range(n + 2):
            left = prev[k - 1] if 1 <= k <= n + 1 else Fraction(0)
            right = prev[k] if k <= n else Fraction(0)
            row.append(left + k * right)
        rows.append(tuple(row))
    return tuple(rows)


def stirling1_fraction(n: int, k: int) -> Fraction:
    """Signed first-kind Stirling number as a plain rational."""
    if k < 0 or k > n:
        return Fraction(0)
    return _stirling1_fraction_rows(n)[n][k]


def stirling2_fraction(n: int, k: int) -> Fraction:
    if k < 0 or k > n:
        return Fraction(0)
    return _stirling2_fraction_rows(n)[n][k]


def _wrap_fraction_rows(rows) -> tuple[tuple[LambdaPoly, ...], ...]:
    return tuple(tuple(LambdaPoly.const(v) for v in row) for row in rows)


@lru_cache(maxsize=None)
def stirling1_classical(size: int) -> Triangle:
    """Signed Stirling numbers of the first kind."""
    return Triangle("s1", size, _wrap_fraction_rows(_stirling1_fraction_rows(size)))


@lru_cache(maxsize=None)
def stirling2_classical(size: int) -> Triangle:
    """Stirling numbers of the second kind."""
    return Triangle("s2", size, _wrap_fraction_rows(_stirling2_fraction_rows(size)))


def _require_agreement(family: str, gf_rows, basis_rows):
    if gf_rows != basis_rows:
        raise RuntimeError(f"{family}: GF route and basis route disagree")


@lru_cache(maxsize=None)
def stirling1_degenerate(size: int) -> Triangle:
    """Degenerate first kind: (1/k!) log_lambda(1+t)^k, checked against
    expanding (x)_n in the (x)_{k,lambda} basis."""
    gf_rows = _rows_from_powers(degenerate_log(1, size), size)
    basis_rows = tuple(
        _padded(expand_in_basis(factorial_basis("falling", n), "lambda-falling"), n)
        for n in range(size + 1)
    )
    _require_agreement("s1-degen", gf_rows, basis_rows)
    return Triangle("s1-degen", size, gf_rows)


@lru_cache(maxsize=None)
def stirling2_degenerate(size: int) -> Triangle:
    """Degenerate second kind: (1/k!) (e_lambda(t) - 1)^k, checked against
    expanding (x)_{n,lambda} in the (x)_k basis."""
    gf_rows = _rows_from_powers(degenerate_exp(1, 1, size) - 1, size)
    basis_rows = tuple(
        _padded(expand_in_basis(factorial_basis("lambda-falling", n), "falling"), n)
        for n in range(size + 1)
    )
    _require_agreement("s2-degen", gf_rows, basis_rows)
    return Triangle("s2-degen", size, gf_rows)


@lru_cache(maxsize=None)
def lah(size: int) -> Triangle:
    """Lah numbers L(n, k) = C(n-1, k-1) n!/k!, checked against expanding
    <x>_n in the (x)_k basis."""
    closed = []
    for n in range(size + 1):
        row = []
        for k in range(n + 1):
            if k == 0:
                row.append(ONE if n == 0 else ZERO)
            else:
                row.append(LambdaPoly.const(binomial(n - 1, k - 1) * factorial(n) / factorial(k)))
        closed.append(tuple(row))
    closed = tuple(closed)
    basis_rows = tuple(
        _padded(expand_in_basis(factorial_basis("rising", n), "falling"), n)
        for n in range(size + 1)
    )
    _require_agreement("lah", closed, basis_rows)
    return Triangle("lah", size, closed)


@lru_cache(maxsize=None)
def unsigned_stirling1_degenerate(size: int) -> Triangle:
    """Unsigned degenerate first kind, (-1)^(n-k) S1_lambda(n, k), checked
    against expanding <x>_n in the <x>_{k,lambda} basis."""
    signed = stirling1_degenerate(size)
    flipped = tuple(
        tuple(-v if (n - k) % 2 else v for k, v in enumerate(row))
        for n, row in enumerate(signed.rows)
    )
    basis_rows = tuple(
        _padded(expand_in_basis(factorial_basis("rising", n), "lambda-rising"), n)
        for n in range(size + 1)
    )
    _require_agreement("s1-degen-unsigned", flipped, basis_rows)
    return Triangle("s1-degen-unsigned", size, flipped)


def _padded(row, n: int) -> tuple[LambdaPoly, ...]:
    out = list(row)
    out.extend([ZERO] * (n + 1 - len(out)))
    return tuple(out[: n + 1])
