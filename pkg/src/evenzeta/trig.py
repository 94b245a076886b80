"""High-precision numeric checks against the exact results.

Every call builds its own :class:`mpmath.MPContext`, so no global precision
state is shared between calls or threads. Results come back as
:class:`BigFloat`, a value tagged with the decimal precision it claims.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from .errors import DomainError
from .rational import binomial
from .zeta import Kind, a_sequence, zeta_coefficient

__all__ = [
    "MIN_PRECISION",
    "GUARD_DIGITS",
    "BigFloat",
    "SqueezeReport",
    "RootReport",
    "ConvergenceReport",
    "pi",
    "p_numeric",
    "q_numeric",
    "relative_error",
    "verify_roots",
    "verify_squeeze",
    "squeeze_reports",
    "odd_zeta_partial",
    "odd_zeta_target",
    "tail_bound",
    "check_convergence",
    "asymptotic_check",
]

MIN_PRECISION = 10
GUARD_DIGITS = 10


@dataclass(frozen=True, eq=False)
class BigFloat:
    value: mpmath.mpf
    precision: int

    def __post_init__(self) -> None:
        if self.precision < MIN_PRECISION:
            raise DomainError(f"precision must be >= {MIN_PRECISION}, got {self.precision}")

    def __str__(self) -> str:
        return mpmath.nstr(self.value, self.precision)

    def __float__(self) -> float:
        return float(self.value)

    def _other(self, other):
        return other.value if isinstance(other, BigFloat) else other

    def __lt__(self, other) -> bool:
        return self.value < self._other(other)

    def __le__(self, other) -> bool:
        return self.value <= self._other(other)

    def __gt__(self, other) -> bool:
        return self.value > self._other(other)

    def __ge__(self, other) -> bool:
        return self.value >= self._other(other)


@dataclass(frozen=True)
class SqueezeReport:
    k: int
    n: int
    lower: BigFloat
    middle: BigFloat
    upper: BigFloat

    @property
    def holds(self) -> bool:
        return self.lower < self.middle < self.upper


@dataclass(frozen=True)
class RootReport:
    """Residuals of sum_r C(2n, 2r) (-1)^r y^(2r) at y = cot((2l - 1) pi / 4n)."""

    n: int
    max_residual: BigFloat
    max_term: BigFloat

    @property
    def relative(self) -> BigFloat:
        if self.max_term.value == 0:
            return self.max_residual
        return BigFloat(self.max_residual.value / self.max_term.value, self.max_residual.precision)

    @property
    def threshold(self) -> Fraction:
        return Fraction(1, 10 ** (self.max_residual.precision - GUARD_DIGITS))

    @property
    def passed(self) -> bool:
        return self.relative.value < _fraction_mpf(self.threshold, self.max_residual.precision)


@dataclass(frozen=True)
class ConvergenceReport:
    k: int
    terms: int
    partial: BigFloat
    target: BigFloat
    gap: BigFloat
    bound: Fraction

    @property
    def holds(self) -> bool:
        # The partial sum undershoots: every omitted term is positive.
        return 0 <= self.gap.value and self.gap.value <= _fraction_mpf(
            self.bound, self.gap.precision
        )


def _check_precision(precision: int) -> None:
    if isinstance(precision, bool) or not isinstance(precision, int):
        raise DomainError(f"precision must be an int, got {precision!r}")
    if precision < MIN_PRECISION:
        raise DomainError(f"precision must be >= {MIN_PRECISION}, got {precision}")


def _positive(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise DomainError(f"{name} must be a positive int, got {value!r}")


def _context(dps: int) -> mpmath.MPContext:
    ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


def _fraction_mpf(x: Fraction, dps: int, ctx=None):
    ctx = ctx or _context(dps + GUARD_DIGITS)
    return ctx.mpf(x.numerator) / x.denominator


def _working_dps(precision: int, k: int, n: int) -> int:
    """Digits needed so the largest term, about (4n/pi)^(2k), keeps ``precision``."""
    growth = max(0.0, 2 * k * math.log10(4 * n / math.pi))
    return precision + GUARD_DIGITS + math.ceil(growth)


def _angles(ctx, n: int):
    return [(2 * l - 1) * ctx.pi / (4 * n) for l in range(1, n + 1)]


def pi(precision: int) -> BigFloat:
    _check_precision(precision)
    ctx = _context(precision + GUARD_DIGITS)
    return BigFloat(+ctx.pi, precision)


def p_numeric(k: int, n: int, precision: int) -> BigFloat:
    """Direct sum of cot^(2k)((2l - 1) pi / (4n)), l = 1..n."""
    _positive("k", k)
    _positive("n", n)
    _check_precision(precision)
    ctx = _context(_working_dps(precision, k, n))
    total = ctx.fsum(ctx.cot(x) ** (2 * k) for x in _angles(ctx, n))
    return BigFloat(total, precision)


def q_numeric(k: int, n: int, precision: int) -> BigFloat:
    """Direct sum of sin^(-2k)((2l - 1) pi / (4n)), l = 1..n."""
    _positive("k", k)
    _positive("n", n)
    _check_precision(precision)
    ctx = _context(_working_dps(precision, k, n))
    total = ctx.fsum(ctx.sin(x) ** (-2 * k) for x in _angles(ctx, n))
    return BigFloat(total, precision)


def relative_error(approx: BigFloat, exact: Fraction) -> mpmath.mpf:
    """|approx - exact| / |exact|, evaluated with guard digits."""
    ctx = _context(approx.precision + 2 * GUARD_DIGITS)
    x = ctx.mpf(exact.numerator) / exact.denominator
    diff = abs(ctx.mpf(approx.value) - x)
    return diff if x == 0 else diff / abs(x)


def verify_roots(n: int, precision: int) -> RootReport:
    """Check that i cot((2l - 1) pi / 4n) are roots of sum_r C(2n, 2r) z^(2r).

    Substituting z = i y turns that polynomial into the real
    sum_r C(2n, 2r) (-1)^r y^(2r), so no complex arithmetic is needed.
    """
    _positive("n", n)
    _check_precision(precision)
    ctx = _context(precision + GUARD_DIGITS)
    coeffs = [int(binomial(2 * n, 2 * r)) * (-1) ** r for r in range(n + 1)]
    worst = ctx.zero
    biggest = ctx.zero
    for x in _angles(ctx, n):
        y2 = ctx.cot(x) ** 2
        power = ctx.one
        value = ctx.zero
        for c in coeffs:
            term = c * power
            value += term
            biggest = max(biggest, abs(term))
            power *= y2
        worst = max(worst, abs(value))
    return RootReport(n, BigFloat(worst, precision), BigFloat(biggest, precision))


def _squeeze_parts(k_values: Sequence[int], n: int, precision: int) -> list[SqueezeReport]:
    ctx = _context(_working_dps(precision, max(k_values), n))
    cot2 = [ctx.cot(x) ** 2 for x in _angles(ctx, n)]
    csc2 = [1 + c for c in cot2]
    # (4n / ((2l - 1) pi))^2 is the reciprocal square of each angle.
    inv_x2 = [(4 * n / ((2 * l - 1) * ctx.pi)) ** 2 for l in range(1, n + 1)]
    reports = []
    for k in k_values:
        lower = ctx.fsum(c**k for c in cot2)
        middle = ctx.fsum(v**k for v in inv_x2)
        upper = ctx.fsum(s**k for s in csc2)
        reports.append(
            SqueezeReport(
                k,
                n,
                BigFloat(lower, precision),
                BigFloat(middle, precision),
                BigFloat(upper, precision),
            )
        )
    return reports


def verify_squeeze(k: int, n: int, precision: int) -> SqueezeReport:
    """P_k(n) < sum_l (4n / ((2l - 1) pi))^(2k) < Q_k(n)."""
    _positive("k", k)
    _positive("n", n)
    _check_precision(precision)
    return _squeeze_parts([k], n, precision)[0]


def squeeze_reports(k_max: int, n: int, precision: int) -> list[SqueezeReport]:
    """:func:`verify_squeeze` for k = 1..k_max, sharing the trig evaluations."""
    _positive("k_max", k_max)
    _positive("n", n)
    _check_precision(precision)
    return _squeeze_parts(list(range(1, k_max + 1)), n, precision)


def odd_zeta_partial(k: int, terms: int, precision: int) -> BigFloat:
    """sum_{l=1}^{terms} (2l - 1)^(-2k)."""
    _positive("k", k)
    _positive("terms", terms)
    _check_precision(precision)
    # Rounding error grows at most linearly in the number of terms.
    ctx = _context(precision + GUARD_DIGITS + len(str(terms)))
    e = -2 * k
    total = ctx.fsum(ctx.mpf(2 * l - 1) ** e for l in range(1, terms + 1))
    return BigFloat(total, precision)


def odd_zeta_target(k: int, precision: int) -> BigFloat:
    """(1 - 2^(-2k)) r_k pi^(2k), the full odd-index sum."""
    _positive("k", k)
    _check_precision(precision)
    ctx = _context(precision + GUARD_DIGITS)
    factor = (1 - Fraction(1, 4**k)) * zeta_coefficient(k).r
    value = ctx.mpf(factor.numerator) / factor.denominator * ctx.pi ** (2 * k)
    return BigFloat(value, precision)


def tail_bound(k: int, terms: int) -> Fraction:
    """(2N - 1)^(1 - 2k) / (2k - 1): bounds the omitted terms past N."""
    _positive("k", k)
    _positive("terms", terms)
    return Fraction(1, (2 * terms - 1) ** (2 * k - 1) * (2 * k - 1))


def check_convergence(k: int, terms: int, precision: int) -> ConvergenceReport:
    partial = odd_zeta_partial(k, terms, precision)
    target = odd_zeta_target(k, precision)
    ctx = _context(precision + GUARD_DIGITS)
    gap = ctx.mpf(target.value) - ctx.mpf(partial.value)
    return ConvergenceReport(k, terms, partial, target, BigFloat(gap, precision), tail_bound(k, terms))


def asymptotic_check(
    kind: Kind | str, k: int, n_list: Sequence[int], precision: int
) -> list[BigFloat]:
    """(P_k(n) or Q_k(n)) / (a_k n^(2k)) for each n, from the direct trig sums."""
    kind = Kind(kind)
    _positive("k", k)
    _check_precision(precision)
    if not n_list:
        raise DomainError("n_list must be nonempty")
    for n in n_list:
        _positive("n", n)
    if any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise DomainError("n_list must be strictly increasing")
    numeric = p_numeric if kind is Kind.P else q_numeric
    a_k = a_sequence(k)[-1]
    ratios = []
    for n in n_list:
        s = numeric(k, n, precision)
        ctx = _context(precision + GUARD_DIGITS)
        scale = ctx.mpf(a_k.numerator) / a_k.denominator * ctx.mpf(n) ** (2 * k)
        ratios.append(BigFloat(ctx.mpf(s.value) / scale, precision))
    return ratios
