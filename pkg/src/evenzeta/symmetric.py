"""Newton-Girard power sums and the unit-shift of elementary symmetric values.

Both transforms work on the *values* e_r or f_r of some finite variable set
t_1..t_n; the variables themselves are never needed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError
from .rational import as_rational, binomial

__all__ = [
    "Family",
    "SymmetricSequence",
    "elementary",
    "power_sums",
    "newton_girard",
    "shift_elementary",
]


class Family(enum.Enum):
    ELEMENTARY = "elementary"
    POWER_SUM = "power-sum"


@dataclass(frozen=True)
class SymmetricSequence:
    """Truncated sequence of symmetric-function values of ``n`` variables.

    Elementary sequences hold e_0..e_m with e_0 = 1; power-sum sequences
    hold f_1..f_m, so ``values[0]`` is f_1.
    """

    family: Family
    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"number of variables must be a positive int, got {self.n!r}")
        values = tuple(as_rational(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if self.family is Family.ELEMENTARY:
            if not values or values[0] != 1:
                raise DomainError("elementary sequence must start with e_0 = 1")
            if any(v != 0 for v in values[self.n + 1:]):
                raise DomainError(f"e_r must vanish for r > n = {self.n}")

    @property
    def order(self) -> int:
        """Largest index stored."""
        if self.family is Family.ELEMENTARY:
            return len(self.values) - 1
        return len(self.values)

    def __getitem__(self, r: int) -> Fraction:
        """e_r or f_r by its mathematical index.

        Elementary values past n are zero by definition, even if not stored.
        """
        if self.family is Family.ELEMENTARY:
            if r < 0:
                raise DomainError(f"negative index {r}")
            if r < len(self.values):
                return self.values[r]
            if r > self.n:
                return Fraction(0)
            raise DomainError(f"e_{r} not provided (sequence stops at e_{self.order})")
        if r == 0:
            return Fraction(self.n)
        if 1 <= r <= len(self.values):
            return self.values[r - 1]
        raise DomainError(f"f_{r} not provided (sequence stops at f_{self.order})")


def elementary(n: int, values: Sequence) -> SymmetricSequence:
    return SymmetricSequence(Family.ELEMENTARY, n, tuple(values))


def power_sums(n: int, values: Sequence) -> SymmetricSequence:
    return SymmetricSequence(Family.POWER_SUM, n, tuple(values))


def _positive(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise DomainError(f"{name} must be a positive int, got {value!r}")


def newton_girard(e: SymmetricSequence, k_max: int) -> SymmetricSequence:
    """Power sums f_1..f_{k_max} from elementary values e_0..e_{k_max}.

    f_k = (-1)^(k-1) [k e_k + sum_{l=1}^{k-1} (-1)^l f_l e_{k-l}]
    """
    if e.family is not Family.ELEMENTARY:
        raise DomainError("newton_girard takes an elementary sequence")
    _positive("k_max", k_max)
    es = [e[r] for r in range(k_max + 1)]
    f: list[Fraction] = []
    for k in range(1, k_max + 1):
        acc = k * es[k]
        for l in range(1, k):
            term = f[l - 1] * es[k - l]
            acc += -term if l % 2 else term
        f.append(acc if k % 2 else -acc)
    return power_sums(e.n, f)


def shift_elementary(e: SymmetricSequence, n: int, k_max: int) -> SymmetricSequence:
    """Elementary values of t_i + 1 from those of t_i.

    e_k(t + 1) = sum_{l=0}^{k} C(n - l, k - l) e_l(t), for k <= n.
    """
    if e.family is not Family.ELEMENTARY:
        raise DomainError("shift_elementary takes an elementary sequence")
    _positive("n", n)
    _positive("k_max", k_max)
    if n != e.n:
        raise DomainError(f"n = {n} does not match the sequence's {e.n} variables")
    if k_max > n:
        raise DomainError(f"k_max = {k_max} exceeds n = {n}")
    es = [e[r] for r in range(k_max + 1)]
    shifted = [
        sum((binomial(n - l, k - l) * es[l] for l in range(k + 1)), Fraction(0))
        for k in range(k_max + 1)
    ]
    return elementary(n, shifted)
