"""Exact rational arithmetic, binomials, Bernoulli numbers and polynomials.

Rationals are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator. Everything here is exact; nothing is
ever rounded.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError

__all__ = [
    "Rational",
    "RationalPolynomial",
    "as_rational",
    "format_rational",
    "parse_rational",
    "binomial",
    "bernoulli",
    "interpolate",
    "evaluate",
]

Rational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise DomainError(f"expected an int or Fraction, got {type(x).__name__}")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    num, sep, den = text.strip().partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise DomainError(f"not an exact rational: {text!r}") from None
    if q <= 0:
        raise DomainError(f"denominator must be positive: {text!r}")
    return Fraction(p, q)


def _check_index(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise DomainError(f"{name} must be nonnegative, got {value}")


def binomial(m: int, j: int) -> Fraction:
    """C(m, j) by the falling-factorial product, dividing exactly at each step.

    Returns 0 when ``j > m``.
    """
    _check_index("m", m)
    _check_index("j", j)
    if j > m:
        return Fraction(0)
    j = min(j, m - j)
    c = 1
    for i in range(1, j + 1):
        # c * (m - j + i) is divisible by i: it equals i * C(m - j + i, i).
        c = c * (m - j + i) // i
    return Fraction(c)


class _BernoulliTable:
    """Append-only memo of B_0, B_1, ... under the B_1 = -1/2 convention."""

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def get(self, m: int) -> Fraction:
        values = self._values
        if m < len(values):
            return values[m]
        with self._lock:
            values = list(self._values)
            while len(values) <= m:
                s = len(values)
                # sum_{j=0}^{s} C(s+1, j) B_j = 0, solved for B_s
                acc = Fraction(0)
                for j, b in enumerate(values):
                    if b:
                        acc += binomial(s + 1, j) * b
                values.append(-acc / (s + 1))
            # Publish a fresh list; readers never see a half-built one.
            self._values = values
            return values[m]


_BERNOULLI = _BernoulliTable()


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m with B_1 = -1/2."""
    _check_index("m", m)
    return _BERNOULLI.get(m)


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense polynomial in one variable; ``coefficients[j]`` multiplies n**j.

    Trailing zero coefficients are stripped on construction, so the zero
    polynomial is the empty tuple and its degree is ``None``.
    """

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [as_rational(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int | None:
        if not self.coefficients:
            return None
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coefficients:
            return Fraction(0)
        return self.coefficients[-1]

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, n) -> Fraction:
        return evaluate(self, n)

    def serialize(self) -> list[str]:
        """Coefficient list, lowest degree first, each as ``"p/q"``."""
        return [format_rational(c) for c in self.coefficients]

    @classmethod
    def deserialize(cls, items: Iterable[str]) -> "RationalPolynomial":
        return cls(tuple(parse_rational(s) for s in items))

    def pretty(self, var: str = "n") -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for j in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[j]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if j == 0:
                body = format_rational(mag)
            else:
                power = var if j == 1 else f"{var}^{j}"
                if mag == 1:
                    body = power
                elif mag.denominator == 1:
                    body = f"{mag.numerator}{power}"
                else:
                    body = f"({format_rational(mag)}){power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.pretty()


def evaluate(p: RationalPolynomial, n) -> Fraction:
    """Horner evaluation at ``n``."""
    x = as_rational(n)
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


def interpolate(points: Sequence[tuple[int, Fraction]]) -> RationalPolynomial:
    """The unique polynomial of degree < len(points) through ``points``.

    Uses Newton divided differences, then expands the Newton form into
    monomial coefficients.
    """
    if not points:
        raise DomainError("interpolate needs at least one point")
    xs = [as_rational(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DomainError("interpolation abscissae must be distinct")
    table = [as_rational(y) for _, y in points]
    m = len(xs)
    newton = [table[0]]
    for order in range(1, m):
        table = [
            (table[i + 1] - table[i]) / (xs[i + order] - xs[i])
            for i in range(m - order)
        ]
        newton.append(table[0])

    # Horner on the Newton form: p = c0 + (n - x0)(c1 + (n - x1)(c2 + ...))
    coeffs = [newton[-1]]
    for i in range(m - 2, -1, -1):
        shifted = [Fraction(0)] + coeffs
        for j, c in enumerate(coeffs):
            shifted[j] -= xs[i] * c
        shifted[0] += newton[i]
        coeffs = shifted
    return RationalPolynomial(tuple(coeffs))
