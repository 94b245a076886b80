"""Exact values of zeta(2k) / pi^(2k) and checks of the identities behind them."""

from .errors import DomainError, IdentityViolation
from .rational import (
    Rational,
    RationalPolynomial,
    bernoulli,
    binomial,
    evaluate,
    format_rational,
    interpolate,
    parse_rational,
)
from .symmetric import Family, SymmetricSequence, elementary, newton_girard, power_sums, shift_elementary
from .zeta import (
    Kind,
    ZetaCoefficient,
    a_sequence,
    e_cot_squared,
    fit_polynomial,
    p_exact,
    q_exact,
    zeta_coefficient,
    zeta_coefficient_bernoulli,
    zeta_coefficient_direct,
)

__version__ = "0.1.0"
