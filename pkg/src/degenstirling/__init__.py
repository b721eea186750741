"""Exact arithmetic for degenerate and probabilistic Stirling families.

Everything is computed in Q[lambda]: polynomial coefficients are
`fractions.Fraction`, series are truncated exponential generating
functions over that ring, and the triangular arrays, moments and
identity checks built on top never touch floating point.
"""

from __future__ import annotations

from .exact import (
    LAMBDA,
    ONE,
    ZERO,
    LambdaPoly,
    binomial,
    factorial,
    falling_factorial,
    format_rational,
    lambda_falling_factorial,
    lambda_rising_factorial,
    parse_rational,
    rising_factorial,
)
from .series import (
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
from .triangles import (
    BASIS_KINDS,
    Triangle,
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
from .classical import bernoulli_polynomial, euler_polynomial
from .probrv import (
    DegenerateMgf,
    MomentProvider,
    bernoulli_provider,
    classical_cumulants,
    classical_mgf,
    classical_prob_bernoulli,
    classical_prob_stirling1,
    closed_form_mgf,
    const_provider,
    degenerate_cumulants,
    degenerate_mgf,
    degenerate_moment,
    discrete_provider,
    gamma_provider,
    mgf_integer_power,
    mgf_power,
    normal_provider,
    parse_provider,
    prob_bernoulli,
    prob_euler,
    prob_stirling1,
    prob_stirling2,
    prob_stirling2_by_copies,
)
from .identities import (
    CheckReport,
    DEFAULT_GRID_MAX,
    DEFAULT_PROVIDER_SPECS,
    DEFAULT_X_POINTS,
    GridResult,
    IdentityCheck,
    available_checks,
    run_check,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "LAMBDA",
    "ONE",
    "ZERO",
    "LambdaPoly",
    "binomial",
    "factorial",
    "falling_factorial",
    "format_rational",
    "lambda_falling_factorial",
    "lambda_rising_factorial",
    "parse_rational",
    "rising_factorial",
    "EgfSeries",
    "constant",
    "degenerate_exp",
    "degenerate_log",
    "exp_series",
    "from_egf",
    "from_taylor",
    "log_of_degenerate_exp",
    "log_series",
    "monomial",
    "BASIS_KINDS",
    "Triangle",
    "expand_in_basis",
    "factorial_basis",
    "lah",
    "stirling1_classical",
    "stirling1_degenerate",
    "stirling1_fraction",
    "stirling2_classical",
    "stirling2_degenerate",
    "stirling2_fraction",
    "unsigned_stirling1_degenerate",
    "bernoulli_polynomial",
    "euler_polynomial",
    "DegenerateMgf",
    "MomentProvider",
    "bernoulli_provider",
    "classical_cumulants",
    "classical_mgf",
    "classical_prob_bernoulli",
    "classical_prob_stirling1",
    "closed_form_mgf",
    "const_provider",
    "degenerate_cumulants",
    "degenerate_mgf",
    "degenerate_moment",
    "discrete_provider",
    "gamma_provider",
    "mgf_integer_power",
    "mgf_power",
    "normal_provider",
    "parse_provider",
    "prob_bernoulli",
    "prob_euler",
    "prob_stirling1",
    "prob_stirling2",
    "prob_stirling2_by_copies",
    "CheckReport",
    "DEFAULT_GRID_MAX",
    "DEFAULT_PROVIDER_SPECS",
    "DEFAULT_X_POINTS",
    "GridResult",
    "IdentityCheck",
    "available_checks",
    "run_check",
    "run_suite",
]
