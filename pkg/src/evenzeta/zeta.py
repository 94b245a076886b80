"""Rational coefficients r_k = zeta(2k) / pi^(2k) and the exact sums P_k, Q_k.

Three routes to r_k are kept deliberately separate:

* :func:`a_sequence` / :func:`zeta_coefficient` run the a_k recurrence and
  divide by 4^(2k) - 4^k;
* :func:`zeta_coefficient_direct` runs a recurrence on r_k itself;
* :func:`zeta_coefficient_bernoulli` uses Euler's Bernoulli-number form.

P_k(n) and Q_k(n), the sums of cot^(2k) and sin^(-2k) over the angles
(2l - 1) pi / (4n), are computed here without any trigonometry: the
cot^2 values are the roots of a polynomial with coefficients C(2n, 2r),
so their power sums follow from Newton-Girard.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError, IdentityViolation
from .rational import RationalPolynomial, bernoulli, binomial, interpolate
from .symmetric import elementary, newton_girard, shift_elementary

__all__ = [
    "Kind",
    "ZetaCoefficient",
    "a_sequence",
    "zeta_coefficient",
    "zeta_coefficient_direct",
    "zeta_coefficient_bernoulli",
    "e_cot_squared",
    "p_exact",
    "q_exact",
    "fit_polynomial",
    "sample_abscissae",
]


class Kind(str, enum.Enum):
    P = "P"
    Q = "Q"


def _positive(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise DomainError(f"{name} must be a positive int, got {value!r}")


@dataclass(frozen=True)
class ZetaCoefficient:
    """zeta(2k) = r * pi^(2k), with ``a`` the leading coefficient of P_k."""

    k: int
    r: Fraction
    a: Fraction

    def __post_init__(self) -> None:
        _positive("k", self.k)
        if self.r != self.a / (4 ** (2 * self.k) - 4 ** self.k):
            raise IdentityViolation(
                f"r != a / (4^{2 * self.k} - 4^{self.k})", {"r": self.r, "a": self.a}
            )


def a_sequence(k_max: int) -> list[Fraction]:
    """a_1..a_{k_max} from

    a_k = (-1)^(k-1) (4^k k / (2k)! + sum_{l<k} (-1)^l 4^(k-l) / (2k-2l)! a_l).
    """
    _positive("k_max", k_max)
    a: list[Fraction] = []
    for k in range(1, k_max + 1):
        acc = Fraction(4**k * k, factorial(2 * k))
        for l in range(1, k):
            term = Fraction(4 ** (k - l), factorial(2 * k - 2 * l)) * a[l - 1]
            acc += -term if l % 2 else term
        a.append(acc if k % 2 else -acc)
    return a


def zeta_coefficient(k: int) -> ZetaCoefficient:
    _positive("k", k)
    a_k = a_sequence(k)[-1]
    return ZetaCoefficient(k, a_k / (4 ** (2 * k) - 4**k), a_k)


def zeta_coefficient_direct(k: int) -> Fraction:
    """r_k from the recurrence written directly on zeta(2l) / pi^(2l).

    With zeta(2l) / (-pi^2)^l = (-1)^l r_l the bracket is rational, and

    r_k = -(-1)^k / (4^(2k) - 4^k)
          * [4^k k / (2k)! + sum_{l<k} (4^(2l) - 4^l) 4^(k-l) / (2k-2l)! (-1)^l r_l]
    """
    _positive("k", k)
    r: list[Fraction] = []
    for j in range(1, k + 1):
        bracket = Fraction(4**j * j, factorial(2 * j))
        for l in range(1, j):
            weight = Fraction((4 ** (2 * l) - 4**l) * 4 ** (j - l), factorial(2 * j - 2 * l))
            bracket += weight * (r[l - 1] if l % 2 == 0 else -r[l - 1])
        prefactor = Fraction(1 if j % 2 else -1, 4 ** (2 * j) - 4**j)
        r.append(prefactor * bracket)
    return r[-1]


def zeta_coefficient_bernoulli(k: int) -> Fraction:
    """(-1)^(k+1) B_2k 2^(2k-1) / (2k)!"""
    _positive("k", k)
    sign = 1 if k % 2 else -1
    return sign * bernoulli(2 * k) * Fraction(2 ** (2 * k - 1), factorial(2 * k))


def e_cot_squared(k: int, n: int) -> Fraction:
    """e_k of cot^2((2l - 1) pi / (4n)), l = 1..n, which is C(2n, 2k)."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise DomainError(f"k must be a nonnegative int, got {k!r}")
    _positive("n", n)
    return binomial(2 * n, 2 * k)


def _cot_squared_elementary(k: int, n: int):
    return elementary(n, [e_cot_squared(r, n) for r in range(min(k, n) + 1)])


def p_exact(k: int, n: int) -> Fraction:
    """Exact sum of cot^(2k)((2l - 1) pi / (4n)) over l = 1..n."""
    _positive("k", k)
    _positive("n", n)
    return newton_girard(_cot_squared_elementary(k, n), k)[k]


def q_exact(k: int, n: int) -> Fraction:
    """Exact sum of sin^(-2k)((2l - 1) pi / (4n)) over l = 1..n.

    sin^-2 = 1 + cot^2, so the cot^2 elementary values are shifted by one
    before taking power sums. The shift only needs e_0..e_min(k, n); past n
    the shifted values vanish like any elementary values of n variables.
    """
    _positive("k", k)
    _positive("n", n)
    shifted = shift_elementary(_cot_squared_elementary(k, n), n, min(k, n))
    return newton_girard(shifted, k)[k]


def sample_abscissae(k: int) -> list[int]:
    """n = k..3k+1: 2k+1 interpolation nodes and one check point."""
    return list(range(k, 3 * k + 2))


def fit_polynomial(kind: Kind | str, k: int) -> RationalPolynomial:
    """Interpolate P_k or Q_k in n and confirm degree 2k and leading a_k.

    Raises :class:`IdentityViolation` when the extra sample falls off the
    curve or the degree or leading coefficient is wrong.
    """
    kind = Kind(kind)
    _positive("k", k)
    exact = p_exact if kind is Kind.P else q_exact
    xs = sample_abscissae(k)
    points = [(n, exact(k, n)) for n in xs]
    poly = interpolate(points[:-1])
    n_check, y_check = points[-1]
    if poly(n_check) != y_check:
        raise IdentityViolation(
            f"{kind.value}_{k}({n_check}) is off the interpolated curve",
            {"n": n_check, "sample": y_check, "polynomial": poly(n_check)},
        )
    if poly.degree != 2 * k:
        raise IdentityViolation(
            f"{kind.value}_{k} has degree {poly.degree}, expected {2 * k}",
            {"degree": poly.degree, "expected": 2 * k},
        )
    a_k = a_sequence(k)[-1]
    if poly.leading != a_k:
        raise IdentityViolation(
            f"{kind.value}_{k} leading coefficient differs from a_{k}",
            {"leading": poly.leading, "a_k": a_k},
        )
    return poly
