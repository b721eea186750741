"""Random-variable moment providers and the probabilistic families.

A `MomentProvider` supplies exact power moments E[Y^j] for one of five
distribution kinds (constant, Bernoulli, finite discrete, normal,
gamma).  Everything downstream is derived from those moments inside
Q[lambda]:

* degenerate moments E[(Y)_{n,lambda}] via the first-kind scaling
  identity (x)_{n,lambda} = sum_k S1(n,k) lambda^(n-k) x^k,
* the degenerate moment generating series sum E[(Y)_{n,lambda}] t^n/n!,
* probabilistic second-kind entries from (MGF - 1)^k / k!,
* degenerate cumulants and probabilistic first-kind entries from
  log_{-lambda}(MGF),
* probabilistic degenerate Bernoulli and Euler polynomial values from
  t/(MGF - 1) * MGF^x and 2/(MGF + 1) * MGF^x.

Closed-form MGFs exist for normal:0,1 and gamma:1,1 and are used as
independent cross-checks of the moment route.  The lambda-free classical
counterparts (ordinary cumulants, the non-degenerate first-kind array,
ordinary probabilistic Bernoulli values) are computed from the ordinary
exp/log series so lambda -> 0 comparisons do not go through the
degenerate code paths they validate.

Providers are value objects keyed by their canonical spec string, and
every builder here is pure, so results are memoized per (provider,
order) and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import (
    LambdaPoly,
    ONE,
    ZERO,
    _as_fraction,
    binomial,
    factorial,
    falling_factorial,
    parse_rational,
    rising_factorial,
)
from .series import (
    EgfSeries,
    constant,
    degenerate_log,
    exp_series,
    from_egf,
    log_of_degenerate_exp,
    log_series,
)
from .triangles import Triangle, stirling1_fraction

__all__ = [
    "MomentProvider",
    "DegenerateMgf",
    "parse_provider",
    "const_provider",
    "bernoulli_provider",
    "discrete_provider",
    "normal_provider",
    "gamma_provider",
    "degenerate_moment",
    "degenerate_mgf",
    "closed_form_mgf",
    "mgf_power",
    "mgf_integer_power",
    "prob_stirling2",
    "prob_stirling2_by_copies",
    "degenerate_cumulants",
    "prob_stirling1",
    "prob_bernoulli",
    "prob_euler",
    "classical_mgf",
    "classical_cumulants",
    "classical_prob_stirling1",
    "classical_prob_bernoulli",
]


@dataclass(frozen=True)
class MomentProvider:
    """Exact power moments of one random variable.

    `params` is the canonical parameter tuple for `kind`; two providers
    compare equal exactly when they describe the same distribution, so
    instances can key caches.
    """

    kind: str
    params: tuple

    @property
    def spec(self) -> str:
        """Canonical spec string, e.g. "gamma:1,1" or "discrete:1=1/2,3=1/2"."""
        if self.kind == "discrete":
            body = ",".join(f"{y}={p}" for y, p in self.params)
        else:
            body = ",".join(str(v) for v in self.params)
        return f"{self.kind}:{body}"

    def moment(self, j: int) -> Fraction:
        """E[Y^j]; j = 0 gives 1."""
        if j < 0:
            raise ValueError("moment index must be >= 0")
        return _power_moments(self, j)[j]

    def mean(self) -> Fraction:
        return self.moment(1)

    def __str__(self):
        return self.spec


@lru_cache(maxsize=None)
def _power_moments(rv: MomentProvider, jmax: int) -> tuple[Fraction, ...]:
    if rv.kind == "const":
        (c,) = rv.params
        return tuple(c**j for j in range(jmax + 1))
    if rv.kind == "bernoulli":
        (p,) = rv.params
        return (Fraction(1),) + (p,) * jmax
    if rv.kind == "discrete":
        return tuple(
            sum((p * y**j for y, p in rv.params), Fraction(0)) for j in range(jmax + 1)
        )
    if rv.kind == "normal":
        mu, var = rv.params
        vals = [Fraction(1)]
        for j in range(jmax):
            prev = vals[j - 1] if j >= 1 else Fraction(0)
            vals.append(mu * vals[j] + var * j * prev)
        return tuple(vals)
    if rv.kind == "gamma":
        alpha, beta = rv.params
        return tuple(rising_factorial(alpha, j) / beta**j for j in range(jmax + 1))
    raise ValueError(f"unknown provider kind: {rv.kind!r}")


def const_provider(c) -> MomentProvider:
    return MomentProvider("const", (_as_fraction(c),))


def bernoulli_provider(p) -> MomentProvider:
    p = _as_fraction(p)
    if not 0 <= p <= 1:
        raise ValueError("bernoulli parameter must lie in [0, 1]")
    return MomentProvider("bernoulli", (p,))


def discrete_provider(pairs) -> MomentProvider:
    items = sorted((_as_fraction(y), _as_fraction(p)) for y, p in pairs)
    ys = [y for y, _ in items]
    if len(set(ys)) != len(ys):
        raise ValueError("discrete support points must be distinct")
    if any(p < 0 for _, p in items):
        raise ValueError("discrete probabilities must be >= 0")
    if sum(p for _, p in items) != 1:
        raise ValueError("discrete probabilities must sum to 1")
    return MomentProvider("discrete", tuple(items))


def normal_provider(mu, var) -> MomentProvider:
    var = _as_fraction(var)
    if var < 0:
        raise ValueError("normal variance must be >= 0")
    return MomentProvider("normal", (_as_fraction(mu), var))


def gamma_provider(alpha, beta) -> MomentProvider:
    alpha, beta = _as_fraction(alpha), _as_fraction(beta)
    if alpha <= 0 or beta <= 0:
        raise ValueError("gamma parameters must be > 0")
    return MomentProvider("gamma", (alpha, beta))


def parse_provider(spec: str) -> MomentProvider:
    """Parse the rv mini-grammar.

    const:c | bernoulli:p | discrete:y1=p1,y2=p2,... | normal:mu,sigma2
    | gamma:alpha,beta  with every number a "p/q" or integer literal.
    """
    if not isinstance(spec, str) or ":" not in spec:
        raise ValueError(f"malformed rv spec: {spec!r}")
    kind, _, body = spec.partition(":")
    try:
        if kind == "const":
            return const_provider(parse_rational(body))
        if kind == "bernoulli":
            return bernoulli_provider(parse_rational(body))
        if kind == "discrete":
            pairs = []
            for item in body.split(","):
                y, sep, p = item.partition("=")
                if not sep:
                    raise ValueError(f"malformed discrete entry: {item!r}")
                pairs.append((parse_rational(y), parse_rational(p)))
            return discrete_provider(pairs)
        if kind == "normal":
            mu, var = body.split(",")
            return normal_provider(parse_rational(mu), parse_rational(var))
        if kind == "gamma":
            alpha, beta = body.split(",")
            return gamma_provider(parse_rational(alpha), parse_rational(beta))
    except ValueError as exc:
        raise ValueError(f"malformed rv spec {spec!r}: {exc}") from None
    raise ValueError(f"unknown rv kind: {kind!r}")


@dataclass(frozen=True)
class DegenerateMgf:
    """E[e_lambda^Y(t)] truncated at `series.order`, tagged with its provider."""

    provider: MomentProvider
    series: EgfSeries


@lru_cache(maxsize=None)
def degenerate_moment(rv: MomentProvider, n: int) -> LambdaPoly:
    """E[(Y)_{n,lambda}] = sum_k S1(n, k) lambda^(n-k) E[Y^k]."""
    if n < 0:
        raise ValueError("degenerate_moment requires n >= 0")
    moments = _power_moments(rv, n)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = stirling1_fraction(n, k) * moments[k]
    return LambdaPoly(coeffs)


@lru_cache(maxsize=None)
def _mgf_series(rv: MomentProvider, order: int) -> EgfSeries:
    return from_egf([degenerate_moment(rv, n) for n in range(order + 1)], order)


def degenerate_mgf(rv: MomentProvider, order: int) -> DegenerateMgf:
    """The degenerate MGF by the moment route; constant term is always 1."""
    return DegenerateMgf(rv, _mgf_series(rv, order))


def closed_form_mgf(rv: MomentProvider, order: int) -> EgfSeries | None:
    """Independent closed-form MGF where one exists.

    normal:0,1 -> exp((1/2) (log e_lambda(t))^2)
    gamma:1,1  -> 1 / (1 - (1/lambda) log(1 + lambda t))
    Returns None for every other provider.
    """
    lg = log_of_degenerate_exp(order)
    if rv.kind == "normal" and rv.params == (Fraction(0), Fraction(1)):
        return exp_series(order).compose(lg * lg * Fraction(1, 2))
    if rv.kind == "gamma" and rv.params == (Fraction(1), Fraction(1)):
        return (constant(ONE, order) - lg).reciprocal()
    return None


@lru_cache(maxsize=None)
def _centered_mgf_powers(rv: MomentProvider, order: int) -> tuple[EgfSeries, ...]:
    # (MGF - 1)^k / k! for k = 0..order
    base = _mgf_series(rv, order) - 1
    out = [constant(ONE, order)]
    for k in range(1, order + 1):
        out.append(out[-1] * base * Fraction(1, k))
    return tuple(out)


@lru_cache(maxsize=None)
def _log_mgf_powers(rv: MomentProvider, order: int) -> tuple[EgfSeries, ...]:
    # (log_{-lambda} MGF)^k / k! for k = 0..order
    base = degenerate_log(-1, order).compose(_mgf_series(rv, order) - 1)
    out = [constant(ONE, order)]
    for k in range(1, order + 1):
        out.append(out[-1] * base * Fraction(1, k))
    return tuple(out)


@lru_cache(maxsize=None)
def mgf_power(rv: MomentProvider, x, order: int) -> EgfSeries:
    """MGF^x for rational x, via sum_k (x)_k (MGF - 1)^k / k!."""
    powers = _centered_mgf_powers(rv, order)
    acc = constant(ONE, order)
    for k in range(1, order + 1):
        c = falling_factorial(x, k)
        if c:
            acc = acc + powers[k].scale(c)
    return acc


@lru_cache(maxsize=None)
def _mgf_integer_powers(rv: MomentProvider, order: int, mmax: int) -> tuple[EgfSeries, ...]:
    # MGF^m by m-fold products; the independent route for sums of copies
    mgf = _mgf_series(rv, order)
    out = [constant(ONE, order)]
    for _ in range(mmax):
        out.append(out[-1] * mgf)
    return tuple(out)


def mgf_integer_power(rv: MomentProvider, m: int, order: int) -> EgfSeries:
    """MGF^m as a literal m-fold product (the sum-of-copies route)."""
    if m < 0:
        raise ValueError("mgf_integer_power requires m >= 0")
    return _mgf_integer_powers(rv, order, m)[m]


@lru_cache(maxsize=None)
def prob_stirling2(rv: MomentProvider, size: int) -> Triangle:
    """Probabilistic degenerate second kind: n! [t^n] (MGF - 1)^k / k!."""
    powers = _centered_mgf_powers(rv, size)
    rows = tuple(
        tuple(powers[k].egf_coefficient(n) for k in range(n + 1)) for n in range(size + 1)
    )
    return Triangle("s2-prob", size, rows, rv=rv.spec)


@lru_cache(maxsize=None)
def prob_stirling2_by_copies(rv: MomentProvider, size: int) -> Triangle:
    """Same array by the alternating sum over moments of j-fold copy sums,

        (1/k!) sum_j C(k, j) (-1)^(k-j) E[(S_j)_{n,lambda}],

    with E[(S_j)_{n,lambda}] read off j-fold MGF products.  Kept separate
    from the generating-function route so the two definitions can be
    checked against each other.
    """
    powers = _mgf_integer_powers(rv, size, size)
    rows = []
    for n in range(size + 1):
        row = []
        for k in range(n + 1):
            acc = ZERO
            for j in range(k + 1):
                term = powers[j].egf_coefficient(n) * binomial(k, j)
                acc = acc + (-term if (k - j) % 2 else term)
            row.append(acc * Fraction(1, int(factorial(k))))
        rows.append(tuple(row))
    return Triangle("s2-prob", size, tuple(rows), rv=rv.spec)


def degenerate_cumulants(rv: MomentProvider, order: int) -> tuple[LambdaPoly, ...]:
    """kappa_{n,lambda}(Y): EGF coefficients of log_{-lambda}(MGF)."""
    lg = _log_mgf_powers(rv, order)[1]
    return tuple(lg.egf_coefficient(n) for n in range(order + 1))


@lru_cache(maxsize=None)
def prob_stirling1(rv: MomentProvider, size: int) -> Triangle:
    """Probabilistic degenerate first kind, from

        (1/k!) (log_{-lambda} MGF)^k = sum_n (-1)^(n-k) S(n,k) t^n/n!.
    """
    powers = _log_mgf_powers(rv, size)
    rows = []
    for n in range(size + 1):
        row = []
        for k in range(n + 1):
            v = powers[k].egf_coefficient(n)
            row.append(-v if (n - k) % 2 else v)
        rows.append(tuple(row))
    return Triangle("s1-prob", size, tuple(rows), rv=rv.spec)


@lru_cache(maxsize=None)
def prob_bernoulli(rv: MomentProvider, x, order: int) -> tuple[LambdaPoly, ...]:
    """Values of the degenerate Bernoulli polynomials attached to Y at x,

        t/(MGF - 1) * MGF^x = sum_n beta_{n,lambda}^Y(x) t^n/n!.

    Requires E[Y] != 0; otherwise MGF - 1 has no t coefficient to cancel
    the numerator t and the generating quotient does not exist.
    """
    if rv.mean() == 0:
        raise ValueError(f"prob_bernoulli undefined for {rv.spec}: E[Y] = 0")
    core = (_mgf_series(rv, order + 1) - 1).divided_by_t().reciprocal()
    series = core * mgf_power(rv, _as_fraction(x), order)
    return tuple(series.egf_coefficient(n) for n in range(order + 1))


@lru_cache(maxsize=None)
def prob_euler(rv: MomentProvider, x, order: int) -> tuple[LambdaPoly, ...]:
    """Values of the degenerate Euler polynomials attached to Y at x,

        2/(MGF + 1) * MGF^x = sum_n E_{n,lambda}^Y(x) t^n/n!.
    """
    core = ((_mgf_series(rv, order) + 1) * Fraction(1, 2)).reciprocal()
    series = core * mgf_power(rv, _as_fraction(x), order)
    return tuple(series.egf_coefficient(n) for n in range(order + 1))


@lru_cache(maxsize=None)
def classical_mgf(rv: MomentProvider, order: int) -> EgfSeries:
    """The ordinary MGF sum E[Y^n] t^n/n!, lambda-free."""
    return from_egf([LambdaPoly.const(rv.moment(n)) for n in range(order + 1)], order)


def classical_cumulants(rv: MomentProvider, order: int) -> tuple[Fraction, ...]:
    """Ordinary cumulants from log(classical MGF), as plain rationals."""
    lg = log_series(order).compose(classical_mgf(rv, order) - 1)
    return tuple(lg.egf_coefficient(n).constant_value() for n in range(order + 1))


@lru_cache(maxsize=None)
def classical_prob_stirling1(rv: MomentProvider, size: int) -> Triangle:
    """The non-degenerate probabilistic first kind, from the ordinary
    cumulant generating function; entries are lambda-free."""
    base = log_series(size).compose(classical_mgf(rv, size) - 1)
    pw = constant(ONE, size)
    cols = [pw]
    for k in range(1, size + 1):
        pw = pw * base * Fraction(1, k)
        cols.append(pw)
    rows = []
    for n in range(size + 1):
        row = []
        for k in range(n + 1):
            v = cols[k].egf_coefficient(n)
            row.append(-v if (n - k) % 2 else v)
        rows.append(tuple(row))
    return Triangle("s1-prob-classical", size, tuple(rows), rv=rv.spec)


def classical_prob_bernoulli(rv: MomentProvider, x, order: int) -> tuple[Fraction, ...]:
    """Ordinary probabilistic Bernoulli values t/(M-1) M^x, lambda-free."""
    if rv.mean() == 0:
        raise ValueError(f"classical_prob_bernoulli undefined for {rv.spec}: E[Y] = 0")
    core = (classical_mgf(rv, order + 1) - 1).divided_by_t().reciprocal()
    series = core * classical_mgf(rv, order).x_power(_as_fraction(x))
    return tuple(series.egf_coefficient(n).constant_value() for n in range(order + 1))
