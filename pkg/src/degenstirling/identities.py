"""Identity checks: every claimed closed sum, recurrence and transfer
formula evaluated as an exact polynomial identity in Q[lambda].

Ground truth is always a generating-function definition; the statements
under test are the closed sums and recurrences.  Identities polynomial
in x are verified by evaluating both sides at a fixed list of rational
x points, more points than any degree that occurs.  A point passes only
on LambdaPoly equality, i.e. identical normalized coefficient vectors.

Some statements circulate with two sign or index conventions.  Those
checks evaluate every recorded form over the whole grid and the report
pins which form holds; a check whose first form fails but whose variant
passes still counts as passing, with the variant preserved as evidence
rather than silently corrected.

Check ids are opaque registry tokens (Thm2.1 .. Thm3.6, Cor2.3, Cor2.8)
used by the CLI; descriptions say what is actually compared.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import classical, probrv, triangles
from .exact import (
    LAMBDA,
    ONE,
    ZERO,
    LambdaPoly,
    binomial,
    factorial,
    lambda_falling_factorial,
    lambda_rising_factorial,
    falling_factorial,
    parse_rational,
)
from .probrv import MomentProvider

__all__ = [
    "GridResult",
    "IdentityCheck",
    "CheckReport",
    "CheckContext",
    "DEFAULT_GRID_MAX",
    "DEFAULT_PROVIDER_SPECS",
    "DEFAULT_X_POINTS",
    "available_checks",
    "run_check",
    "run_suite",
]

DEFAULT_GRID_MAX = 10
DEFAULT_PROVIDER_SPECS = (
    "const:1",
    "bernoulli:1/2",
    "discrete:1=1/2,3=1/2",
    "normal:0,1",
    "gamma:1,1",
)
DEFAULT_X_POINTS = tuple(
    parse_rational(s) for s in ("0", "1", "-1", "1/2", "2", "3", "5", "-2", "1/3", "7", "4", "-3")
)

_NORMAL01 = "normal:0,1"
_GAMMA11 = "gamma:1,1"


@dataclass(frozen=True)
class GridResult:
    point: str
    status: str  # "pass" | "fail" | "skipped"
    lhs: str = ""
    rhs: str = ""
    reason: str = ""


@dataclass(frozen=True)
class IdentityCheck:
    check_id: str
    description: str
    grid: str
    results: tuple[GridResult, ...]
    forms: tuple[tuple[str, str], ...] = ()
    variant: str = ""

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.status == "pass")

    @property
    def failed(self) -> int:
        return sum(1 for r in self.results if r.status == "fail")

    @property
    def skipped(self) -> int:
        return sum(1 for r in self.results if r.status == "skipped")

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json_obj(self) -> dict:
        return {
            "id": self.check_id,
            "description": self.description,
            "grid": self.grid,
            "status": "pass" if self.ok else "fail",
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "variant": self.variant,
            "failures": [
                {"point": r.point, "lhs": r.lhs, "rhs": r.rhs}
                for r in self.results
                if r.status == "fail"
            ],
            "skips": [
                {"point": r.point, "reason": r.reason}
                for r in self.results
                if r.status == "skipped"
            ],
        }


@dataclass(frozen=True)
class CheckReport:
    suite: str
    checks: tuple[IdentityCheck, ...]
    wall_time: float

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def totals(self) -> dict:
        return {
            "checks": len(self.checks),
            "passed": sum(c.passed for c in self.checks),
            "failed": sum(c.failed for c in self.checks),
            "skipped": sum(c.skipped for c in self.checks),
        }

    def to_json_obj(self) -> dict:
        # wall_time stays off the serialized form so emitted reports are
        # byte-for-byte reproducible
        return {
            "suite": self.suite,
            "status": "pass" if self.ok else "fail",
            "totals": self.totals,
            "checks": [c.to_json_obj() for c in self.checks],
        }


@dataclass(frozen=True)
class CheckContext:
    providers: tuple[MomentProvider, ...]
    n_max: int
    x_points: tuple[Fraction, ...]
    order: int


def _cmp(results: list, point: str, lhs, rhs):
    if lhs == rhs:
        results.append(GridResult(point, "pass"))
    else:
        results.append(GridResult(point, "fail", lhs=str(lhs), rhs=str(rhs)))


def _finish(check_id, description, grid, forms_results) -> IdentityCheck:
    if len(forms_results) == 1:
        _, results = forms_results[0]
        return IdentityCheck(check_id, description, grid, tuple(results))
    passing = [lab for lab, res in forms_results if all(r.status != "fail" for r in res)]
    forms = tuple((lab, "pass" if lab in passing else "fail") for lab, _ in forms_results)
    if passing:
        pinned = passing[0]
        results = dict(forms_results)[pinned]
        variant = f"pinned={pinned}; " + ", ".join(f"{lab}:{st}" for lab, st in forms)
    else:
        results = forms_results[0][1]
        variant = "pinned=none; " + ", ".join(f"{lab}:{st}" for lab, st in forms)
    return IdentityCheck(check_id, description, grid, tuple(results), forms=forms, variant=variant)


@lru_cache(maxsize=None)
def _rising_lambda_weight(k: int) -> LambdaPoly:
    # (lambda+1)(lambda+2)...(lambda+k-1), the collapsed log_{-lambda} weight
    out = ONE
    for j in range(1, k):
        out = out * (LAMBDA + j)
    return out


def _half(p: LambdaPoly) -> LambdaPoly:
    return p * Fraction(1, 2)


_GAUSS_WEIGHT_CACHE: dict[int, Fraction] = {}


def _gauss_weight(k: int) -> Fraction:
    # (2k)! / (2^k k!)
    if k not in _GAUSS_WEIGHT_CACHE:
        _GAUSS_WEIGHT_CACHE[k] = factorial(2 * k) / (2**k * factorial(k))
    return _GAUSS_WEIGHT_CACHE[k]


def _grid_desc(ctx: CheckContext, *, with_x=False, n_text=None, providers=None) -> str:
    parts = []
    if providers is None:
        providers = [rv.spec for rv in ctx.providers]
    parts.append("providers=" + ",".join(providers))
    parts.append(n_text if n_text else f"n<={ctx.n_max}")
    if with_x:
        parts.append("x=" + ",".join(str(x) for x in ctx.x_points))
    return "; ".join(parts)


# --- checks over the whole provider panel ------------------------------


def _check_thm_2_1(ctx: CheckContext) -> IdentityCheck:
    results = []
    for rv in ctx.providers:
        kappa = probrv.degenerate_cumulants(rv, ctx.order)
        t2 = probrv.prob_stirling2(rv, ctx.n_max)
        for n in range(ctx.n_max + 1):
            rhs = ZERO
            for k in range(1, n + 1):
                term = _rising_lambda_weight(k) * t2.entry(n, k)
                rhs = rhs + (-term if k % 2 == 0 else term)
            _cmp(results, f"rv={rv.spec} n={n}", kappa[n], rhs)
    return _finish(
        "Thm2.1",
        "degenerate cumulants as alternating weighted sums of probabilistic "
        "second-kind entries",
        _grid_desc(ctx),
        [("statement", results)],
    )


def _check_thm_2_2(ctx: CheckContext) -> IdentityCheck:
    results = []
    for rv in ctx.providers:
        t2 = probrv.prob_stirling2(rv, ctx.n_max)
        t1 = probrv.prob_stirling1(rv, ctx.n_max)
        for x in ctx.x_points:
            power = probrv.mgf_power(rv, x, ctx.order)
            for n in range(ctx.n_max + 1):
                truth = power.egf_coefficient(n)
                second = ZERO
                first = ZERO
                for k in range(n + 1):
                    c = falling_factorial(x, k)
                    if c:
                        second = second + t2.entry(n, k) * c
                    term = lambda_rising_factorial(x, k) * t1.entry(n, k)
                    first = first + (-term if (n - k) % 2 else term)
                base = f"rv={rv.spec} x={x} n={n}"
                _cmp(results, base + " side=second-kind", second, truth)
                _cmp(results, base + " side=first-kind", first, truth)
    return _finish(
        "Thm2.2",
        "MGF^x coefficients expanded over both probabilistic triangles "
        "against the direct series power",
        _grid_desc(ctx, with_x=True),
        [("statement", results)],
    )


def _check_cor_2_3(ctx: CheckContext) -> IdentityCheck:
    results = []
    m_list = (1, 2, 3, 4)
    for rv in ctx.providers:
        t2 = probrv.prob_stirling2(rv, ctx.n_max)
        t1 = probrv.prob_stirling1(rv, ctx.n_max)
        for m in m_list:
            truth_series = probrv.mgf_integer_power(rv, m, ctx.order)
            for n in range(ctx.n_max + 1):
                truth = truth_series.egf_coefficient(n)
                second = ZERO
                first = ZERO
                for k in range(n + 1):
                    c = falling_factorial(m, k)
                    if c:
                        second = second + t2.entry(n, k) * c
                    term = lambda_rising_factorial(m, k) * t1.entry(n, k)
                    first = first + (-term if (n - k) % 2 else term)
                base = f"rv={rv.spec} m={m} n={n}"
                _cmp(results, base + " side=second-kind", second, truth)
                _cmp(results, base + " side=first-kind", first, truth)
    return _finish(
        "Cor2.3",
        "moments of m-fold independent copy sums: triangle expansions "
        "against literal m-fold MGF products",
        _grid_desc(ctx, n_text=f"n<={ctx.n_max}; m<=4"),
        [("statement", results)],
    )


def _check_thm_2_4(ctx: CheckContext) -> IdentityCheck:
    results = []
    s1neg = triangles.stirling1_degenerate(ctx.n_max)
    s2neg = triangles.stirling2_degenerate(ctx.n_max)
    for rv in ctx.providers:
        t2 = probrv.prob_stirling2(rv, ctx.n_max)
        t1 = probrv.prob_stirling1(rv, ctx.n_max)
        for n in range(ctx.n_max + 1):
            for l in range(n + 1):
                rhs = ZERO
                for k in range(l, n + 1):
                    term = t1.entry(n, k) * s2neg.entry(k, l).negate_lambda()
                    rhs = rhs + (-term if (n - k) % 2 else term)
                base = f"rv={rv.spec} n={n} l={l}"
                _cmp(results, base + " part=second-kind", t2.entry(n, l), rhs)
                lhs = t1.entry(n, l)
                if (n - l) % 2:
                    lhs = -lhs
                rhs = ZERO
                for k in range(l, n + 1):
                    rhs = rhs + t2.entry(n, k) * s1neg.entry(k, l).negate_lambda()
                _cmp(results, base + " part=first-kind", lhs, rhs)
    return _finish(
        "Thm2.4",
        "inversion between the probabilistic triangles through the "
        "sign-flipped degenerate triangles",
        _grid_desc(ctx),
        [("statement", results)],
    )


def _check_thm_2_5(ctx: CheckContext) -> IdentityCheck:
    results = []
    s2d = triangles.stirling2_degenerate(ctx.n_max)
    lah_t = triangles.lah(ctx.n_max)
    for rv in ctx.providers:
        t2 = probrv.prob_stirling2(rv, ctx.n_max)
        t1 = probrv.prob_stirling1(rv, ctx.n_max)
        for n in range(ctx.n_max + 1):
            for j in range(n + 1):
                rhs = ZERO
                for l in range(j, n + 1):
                    for k in range(l, n + 1):
                        term = t1.entry(n, k) * lah_t.entry(k, l) * s2d.entry(l, j)
                        if term.is_zero():
                            continue
                        term = term.shifted(k - l)
                        rhs = rhs + (-term if (n - k) % 2 else term)
                _cmp(results, f"rv={rv.spec} n={n} j={j}", t2.entry(n, j), rhs)
    return _finish(
        "Thm2.5",
        "probabilistic second kind from the first kind through Lah and "
        "degenerate second-kind transfers",
        _grid_desc(ctx),
        [("statement", results)],
    )


def _check_thm_2_6(ctx: CheckContext) -> IdentityCheck:
    def run(sign_from_nk: bool):
        results = []
        lah_t = triangles.lah(ctx.n_max)
        for rv in ctx.providers:
            t1 = probrv.prob_stirling1(rv, ctx.n_max)
            for n in range(1, ctx.n_max + 1):
                rhs = ZERO
                for l in range(1, n + 1):
                    fall1 = lambda_falling_factorial(1, l)
                    for k in range(l, n + 1):
                        term = t1.entry(n, k) * lah_t.entry(k, l) * fall1
                        if term.is_zero():
                            continue
                        term = term.shifted(k - l)
                        parity = (n - k) % 2 if sign_from_nk else (k - l) % 2
                        rhs = rhs + (-term if parity else term)
                _cmp(results, f"rv={rv.spec} n={n}", probrv.degenerate_moment(rv, n), rhs)
        return results

    return _finish(
        "Thm2.6",
        "degenerate moments as double sums over the probabilistic first "
        "kind, Lah numbers and (1)_{l,lambda}",
        _grid_desc(ctx, n_text=f"1<=n<={ctx.n_max}"),
        [("sign-(k-l)", run(False)), ("sign-(n-k)", run(True))],
    )


def _check_thm_2_7(ctx: CheckContext) -> IdentityCheck:
    def run(sign_from_nj: bool):
        results = []
        for rv in ctx.providers:
            t1 = probrv.prob_stirling1(rv, ctx.n_max)
            kappa = probrv.degenerate_cumulants(rv, ctx.order)
            for n in range(1, ctx.n_max + 1):
                for k in range(1, n + 1):
                    rhs = ZERO
                    for j in range(k - 1, n):
                        term = t1.entry(j, k - 1) * kappa[n - j] * binomial(n, j)
                        if term.is_zero():
                            continue
                        parity = (n - j - 1) % 2 if sign_from_nj else (j - k - 1) % 2
                        rhs = rhs + (-term if parity else term)
                    rhs = rhs * Fraction(1, k)
                    _cmp(results, f"rv={rv.spec} n={n} k={k}", t1.entry(n, k), rhs)
        return results

    return _finish(
        "Thm2.7",
        "cumulant recurrence for the probabilistic first kind",
        _grid_desc(ctx, n_text=f"1<=k<=n<={ctx.n_max}"),
        [("sign-(n-j-1)", run(True)), ("sign-(j-k-1)", run(False))],
    )


def _check_cor_2_8(ctx: CheckContext) -> IdentityCheck:
    results = []
    for rv in ctx.providers:
        t1 = probrv.prob_stirling1(rv, ctx.n_max)
        kappa1 = probrv.degenerate_cumulants(rv, 2)[1]
        for k in range(ctx.n_max + 1):
            _cmp(results, f"rv={rv.spec} k={k}", t1.entry(k, k), kappa1**k)
    return _finish(
        "Cor2.8",
        "first-kind diagonal equals powers of the first cumulant",
        _grid_desc(ctx, n_text=f"k<={ctx.n_max}"),
        [("statement", results)],
    )


def _check_thm_2_9(ctx: CheckContext) -> IdentityCheck:
    results = []
    for rv in ctx.providers:
        t2 = probrv.prob_stirling2(rv, ctx.n_max)
        mean = LambdaPoly.const(rv.mean())
        for n in range(1, ctx.n_max + 1):
            for k in range(1, n + 1):
                rhs = ZERO
                for j in range(k - 1, n):
                    term = t2.entry(j, k - 1) * probrv.degenerate_moment(rv, n - j) * binomial(n, j)
                    rhs = rhs + term
                rhs = rhs * Fraction(1, k)
                _cmp(results, f"rv={rv.spec} n={n} k={k}", t2.entry(n, k), rhs)
        for n in range(1, ctx.n_max + 1):
            _cmp(
                results,
                f"rv={rv.spec} n={n} k=1 moment-row",
                t2.entry(n, 1),
                probrv.degenerate_moment(rv, n),
            )
        for k in range(ctx.n_max + 1):
            _cmp(results, f"rv={rv.spec} diagonal k={k}", t2.entry(k, k), mean**k)
    return _finish(
        "Thm2.9",
        "moment recurrence for the probabilistic second kind, its k=1 "
        "moment row and (E[Y])^k diagonal",
        _grid_desc(ctx, n_text=f"1<=k<=n<={ctx.n_max}"),
        [("statement", results)],
    )


def _check_thm_2_10(ctx: CheckContext) -> IdentityCheck:
    results = []
    n_top = min(8, ctx.n_max)
    for rv in ctx.providers:
        if rv.mean() == 0:
            results.append(
                GridResult(f"rv={rv.spec}", "skipped", reason="E[Y]=0: Bernoulli quotient undefined")
            )
            continue
        t1 = probrv.prob_stirling1(rv, n_top)
        numbers = probrv.prob_bernoulli(rv, 0, ctx.order)
        for x in ctx.x_points:
            values = probrv.prob_bernoulli(rv, x, ctx.order)
            mgx = []
            for j in range(n_top + 1):
                acc = ZERO
                for k in range(j + 1):
                    term = lambda_rising_factorial(x, k) * t1.entry(j, k)
                    acc = acc + (-term if (j - k) % 2 else term)
                mgx.append(acc)
            for n in range(n_top + 1):
                rhs = ZERO
                for j in range(n + 1):
                    rhs = rhs + mgx[j] * numbers[n - j] * binomial(n, j)
                _cmp(results, f"rv={rv.spec} x={x} n={n}", values[n], rhs)
    return _finish(
        "Thm2.10",
        "degenerate Bernoulli values as binomial convolutions of Bernoulli "
        "numbers with first-kind MGF^x expansions",
        _grid_desc(ctx, with_x=True, n_text=f"n<={n_top}"),
        [("statement", results)],
    )


def _check_thm_2_11(ctx: CheckContext) -> IdentityCheck:
    results = []
    n_top = min(8, ctx.n_max)
    for rv in ctx.providers:
        t1 = probrv.prob_stirling1(rv, n_top)
        numbers = probrv.prob_euler(rv, 0, ctx.order)
        for x in ctx.x_points:
            values = probrv.prob_euler(rv, x, ctx.order)
            mgx = []
            for j in range(n_top + 1):
                acc = ZERO
                for k in range(j + 1):
                    term = lambda_rising_factorial(x, k) * t1.entry(j, k)
                    acc = acc + (-term if (j - k) % 2 else term)
                mgx.append(acc)
            for n in range(n_top + 1):
                rhs = ZERO
                for j in range(n + 1):
                    rhs = rhs + mgx[j] * numbers[n - j] * binomial(n, j)
                _cmp(results, f"rv={rv.spec} x={x} n={n}", values[n], rhs)
    return _finish(
        "Thm2.11",
        "degenerate Euler values as binomial convolutions of Euler numbers "
        "with first-kind MGF^x expansions",
        _grid_desc(ctx, with_x=True, n_text=f"n<={n_top}"),
        [("statement", results)],
    )


def _check_thm_2_12(ctx: CheckContext) -> IdentityCheck:
    results = []
    for rv in ctx.providers:
        t1 = probrv.prob_stirling1(rv, ctx.n_max)
        t2 = probrv.prob_stirling2(rv, ctx.n_max)
        s1d = triangles.stirling1_degenerate(ctx.n_max)
        inner = {}
        for n in range(ctx.n_max + 1):
            for k in range(n + 1):
                acc = ZERO
                for m in range(k, n + 1):
                    acc = acc + s1d.entry(m, k) * t2.entry(n, m)
                inner[(n, k)] = acc
        moments = [probrv.degenerate_moment(rv, i) for i in range(ctx.n_max + 1)]
        for x in ctx.x_points:
            euler_vals = probrv.prob_euler(rv, x, ctx.order)
            for n in range(ctx.n_max + 1):
                lhs = euler_vals[n]
                for l in range(n + 1):
                    lhs = lhs + euler_vals[l] * moments[n - l] * binomial(n, l)
                lhs = _half(lhs)
                mid = ZERO
                rhs = ZERO
                for k in range(n + 1):
                    term = lambda_rising_factorial(x, k) * t1.entry(n, k)
                    mid = mid + (-term if (n - k) % 2 else term)
                    rhs = rhs + lambda_falling_factorial(x, k) * inner[(n, k)]
                base = f"rv={rv.spec} x={x} n={n}"
                _cmp(results, base + " expr=first-kind", lhs, mid)
                _cmp(results, base + " expr=second-kind", mid, rhs)
        # geometric power sum against Bernoulli differences
        if rv.mean() == 0:
            results.append(
                GridResult(
                    f"rv={rv.spec} power-sum", "skipped", reason="E[Y]=0: Bernoulli quotient undefined"
                )
            )
            continue
        numbers = probrv.prob_bernoulli(rv, 0, ctx.order)
        for upto in range(5):
            series_sum = probrv.mgf_integer_power(rv, 0, ctx.order)
            for k in range(1, upto + 1):
                series_sum = series_sum + probrv.mgf_integer_power(rv, k, ctx.order)
            top = probrv.prob_bernoulli(rv, upto + 1, ctx.order)
            for m in range(ctx.order):
                lhs = series_sum.egf_coefficient(m)
                rhs = (top[m + 1] - numbers[m + 1]) * Fraction(1, m + 1)
                _cmp(results, f"rv={rv.spec} power-sum upto={upto} m={m}", lhs, rhs)
    return _finish(
        "Thm2.12",
        "Euler-moment average equal to both triangle expansions of MGF^x, "
        "plus geometric MGF power sums as Bernoulli differences",
        _grid_desc(ctx, with_x=True),
        [("statement", results)],
    )


# --- fixed-provider checks (closed-form MGF families) ------------------


def _check_thm_3_1(ctx: CheckContext) -> IdentityCheck:
    rv = probrv.parse_provider(_NORMAL01)
    s2d = triangles.stirling2_degenerate(ctx.n_max)
    results = []
    weights = []
    for m in range(ctx.n_max + 1):
        w = Fraction(0)
        for k in range(m // 2 + 1):
            w += _gauss_weight(k) * triangles.stirling1_fraction(m, 2 * k)
        weights.append(w)
    for n in range(ctx.n_max + 1):
        rhs = ZERO
        for m in range(n + 1):
            if weights[m]:
                rhs = rhs + s2d.entry(n, m) * weights[m]
        _cmp(results, f"rv={rv.spec} n={n}", probrv.degenerate_moment(rv, n), rhs)
    for j in range(1, 7):
        lhs = probrv.degenerate_moment(rv, 2 * j).evaluate(0)
        _cmp(results, f"rv={rv.spec} lambda=0 even moment 2n={2 * j}", lhs, _gauss_weight(j))
    return _finish(
        "Thm3.1",
        "standard normal degenerate moments via classical first-kind / "
        "degenerate second-kind double sums, with lambda=0 even moments",
        f"provider={rv.spec}; n<={ctx.n_max}; lambda=0 moments n<=6",
        [("statement", results)],
    )


def _check_thm_3_2(ctx: CheckContext) -> IdentityCheck:
    rv = probrv.parse_provider(_NORMAL01)
    s2d = triangles.stirling2_degenerate(ctx.n_max)
    t2 = probrv.prob_stirling2(rv, ctx.n_max)
    results = []
    inner = {}
    for n in range(ctx.n_max + 1):
        for j in range(n // 2 + 1):
            acc = ZERO
            for m in range(2 * j, n + 1):
                c = triangles.stirling1_fraction(m, 2 * j)
                if c:
                    acc = acc + s2d.entry(n, m) * c
            inner[(n, j)] = acc
    for n in range(ctx.n_max + 1):
        for k in range(n + 1):
            rhs = ZERO
            for l in range(k + 1):
                lpart = ZERO
                for j in range(n // 2 + 1):
                    c = Fraction(l) ** j * _gauss_weight(j)
                    if c:
                        lpart = lpart + inner[(n, j)] * c
                term = lpart * binomial(k, l)
                rhs = rhs + (-term if (k - l) % 2 else term)
            rhs = rhs * Fraction(1, int(factorial(k)))
            _cmp(results, f"rv={rv.spec} n={n} k={k}", t2.entry(n, k), rhs)
    return _finish(
        "Thm3.2",
        "standard normal probabilistic second kind via alternating "
        "binomial sums over Gaussian-weighted transfers",
        f"provider={rv.spec}; n,k<={ctx.n_max}",
        [("statement", results)],
    )


def _check_thm_3_3(ctx: CheckContext) -> IdentityCheck:
    rv = probrv.parse_provider(_NORMAL01)
    s2d = triangles.stirling2_degenerate(ctx.n_max)

    def run(contract_j: bool):
        results = []
        for x in ctx.x_points:
            euler_vals = probrv.prob_euler(rv, x, ctx.order)
            for n in range(ctx.n_max + 1):
                rhs = ZERO
                for j in range(n + 1):
                    for k in range(j // 2 + 1):
                        c = classical.euler_polynomial(k, x) * _gauss_weight(k)
                        c *= triangles.stirling1_fraction(j, 2 * k)
                        if not c:
                            continue
                        rhs = rhs + s2d.entry(n, j if contract_j else k) * c
                _cmp(results, f"rv={rv.spec} x={x} n={n}", euler_vals[n], rhs)
        return results

    return _finish(
        "Thm3.3",
        "standard normal degenerate Euler values from classical Euler "
        "polynomials through first-kind and degenerate second-kind transfers",
        f"provider={rv.spec}; n<={ctx.n_max}; x=" + ",".join(str(x) for x in ctx.x_points),
        [("index-j", run(True)), ("index-k", run(False))],
    )


def _check_thm_3_4(ctx: CheckContext) -> IdentityCheck:
    rv = probrv.parse_provider(_NORMAL01)
    s2d = triangles.stirling2_degenerate(ctx.n_max)
    results = []
    moments = [probrv.degenerate_moment(rv, i) for i in range(ctx.n_max + 1)]
    for x in ctx.x_points:
        euler_vals = probrv.prob_euler(rv, x, ctx.order)
        for n in range(ctx.n_max + 1):
            lhs = euler_vals[n]
            for l in range(n + 1):
                lhs = lhs + euler_vals[l] * moments[n - l] * binomial(n, l)
            lhs = _half(lhs)
            rhs = ZERO
            for j in range(n + 1):
                for k in range(j // 2 + 1):
                    c = _gauss_weight(k) * triangles.stirling1_fraction(j, 2 * k) * x**k
                    if c:
                        rhs = rhs + s2d.entry(n, j) * c
            _cmp(results, f"rv={rv.spec} x={x} n={n}", lhs, rhs)
    return _finish(
        "Thm3.4",
        "standard normal Euler-moment average as a Gaussian-weighted "
        "polynomial in x over degenerate second-kind entries",
        f"provider={rv.spec}; n<={ctx.n_max}; x=" + ",".join(str(x) for x in ctx.x_points),
        [("statement", results)],
    )


def _check_thm_3_5(ctx: CheckContext) -> IdentityCheck:
    rv = probrv.parse_provider(_GAMMA11)
    s1d = triangles.stirling1_degenerate(ctx.n_max)
    t1 = probrv.prob_stirling1(rv, ctx.n_max)
    results = []
    for n in range(ctx.n_max + 1):
        for k in range(n + 1):
            rhs = ZERO
            for l in range(k, n + 1):
                term = s1d.entry(l, k) * triangles.stirling1_fraction(n, l)
                if term.is_zero():
                    continue
                term = term.shifted(n - l)
                rhs = rhs + (-term if (n - l) % 2 else term)
            _cmp(results, f"rv={rv.spec} n={n} k={k}", t1.entry(n, k), rhs)
    for n in range(ctx.n_max + 1):
        for k in range(n + 1):
            lhs = t1.entry(n, k).evaluate(0)
            _cmp(
                results,
                f"rv={rv.spec} lambda=0 n={n} k={k}",
                lhs,
                triangles.stirling1_fraction(n, k),
            )
    return _finish(
        "Thm3.5",
        "exponential-rate-one probabilistic first kind as lambda-weighted "
        "products of degenerate and classical first-kind entries, with its "
        "classical lambda=0 limit",
        f"provider={rv.spec}; n,k<={ctx.n_max}",
        [("statement", results)],
    )


def _check_thm_3_6(ctx: CheckContext) -> IdentityCheck:
    rv = probrv.parse_provider(_GAMMA11)
    results = []
    numbers = probrv.prob_bernoulli(rv, 0, ctx.order)
    for n in range(5):
        top = probrv.prob_bernoulli(rv, n + 1, ctx.order)
        for m in range(ctx.n_max + 1):
            lhs = (top[m + 1] - numbers[m + 1]) * Fraction(1, m + 1)
            rhs = ZERO
            for l in range(m + 1):
                c = Fraction(0)
                for k in range(n + 1):
                    c += binomial(k + l - 1, l)
                c *= factorial(l) * triangles.stirling1_fraction(m, l)
                if c:
                    rhs = rhs + LambdaPoly.const(c).shifted(m - l)
            _cmp(results, f"rv={rv.spec} n={n} m={m}", lhs, rhs)
    return _finish(
        "Thm3.6",
        "exponential-rate-one Bernoulli differences as lambda-weighted "
        "classical first-kind sums with negative-upper-index binomials",
        f"provider={rv.spec}; n<=4; m<={ctx.n_max}",
        [("statement", results)],
    )


_CHECKS: dict[str, tuple] = {
    "Thm2.1": (_check_thm_2_1, False),
    "Thm2.2": (_check_thm_2_2, False),
    "Cor2.3": (_check_cor_2_3, False),
    "Thm2.4": (_check_thm_2_4, False),
    "Thm2.5": (_check_thm_2_5, False),
    "Thm2.6": (_check_thm_2_6, False),
    "Thm2.7": (_check_thm_2_7, False),
    "Cor2.8": (_check_cor_2_8, False),
    "Thm2.9": (_check_thm_2_9, False),
    "Thm2.10": (_check_thm_2_10, False),
    "Thm2.11": (_check_thm_2_11, False),
    "Thm2.12": (_check_thm_2_12, False),
    "Thm3.1": (_check_thm_3_1, True),
    "Thm3.2": (_check_thm_3_2, True),
    "Thm3.3": (_check_thm_3_3, True),
    "Thm3.4": (_check_thm_3_4, True),
    "Thm3.5": (_check_thm_3_5, True),
    "Thm3.6": (_check_thm_3_6, True),
}


def available_checks() -> tuple[str, ...]:
    return tuple(_CHECKS)


def _make_context(providers=None, n_max=None, x_points=None) -> CheckContext:
    if providers is None:
        providers = DEFAULT_PROVIDER_SPECS
    resolved = tuple(
        rv if isinstance(rv, MomentProvider) else probrv.parse_provider(rv) for rv in providers
    )
    n_max = DEFAULT_GRID_MAX if n_max is None else int(n_max)
    if n_max < 0:
        raise ValueError("n bound must be >= 0")
    if x_points is None:
        x_points = DEFAULT_X_POINTS
    else:
        x_points = tuple(
            x if isinstance(x, Fraction) else parse_rational(str(x)) for x in x_points
        )
    order = max(12, n_max + 2)
    return CheckContext(resolved, n_max, tuple(x_points), order)


def run_check(check_id: str, providers=None, n_max=None, x_points=None) -> IdentityCheck:
    """Run one registered check.  Checks with a fixed provider (the
    section with closed-form MGFs) ignore the provider override."""
    if check_id not in _CHECKS:
        raise ValueError(f"unknown check id: {check_id!r}")
    runner, _fixed = _CHECKS[check_id]
    return runner(_make_context(providers, n_max, x_points))


def run_suite(check_ids=None, providers=None, n_max=None, x_points=None) -> CheckReport:
    """Run several checks (all of them by default) into one report."""
    if check_ids is None:
        check_ids = available_checks()
    unknown = [c for c in check_ids if c not in _CHECKS]
    if unknown:
        raise ValueError(f"unknown check ids: {', '.join(map(repr, unknown))}")
    started = time.perf_counter()
    checks = tuple(run_check(cid, providers, n_max, x_points) for cid in check_ids)
    wall = time.perf_counter() - started
    suite = "all" if tuple(check_ids) == available_checks() else ",".join(check_ids)
    return CheckReport(suite, checks, wall)
