from fractions import Fraction
from math import factorial

import mpmath
import pytest

from evenzeta.errors import DomainError, IdentityViolation
from evenzeta.rational import RationalPolynomial, binomial
from evenzeta.zeta import (
    ZetaCoefficient,
    a_sequence,
    e_cot_squared,
    fit_polynomial,
    p_exact,
    q_exact,
    sample_abscissae,
    zeta_coefficient,
    zeta_coefficient_bernoulli,
    zeta_coefficient_direct,
)


def trig_sum(k, n, which, dps=60):
    """Independent mpmath sum of cot^2k or sin^-2k at the angles (2l-1)pi/4n."""
    with mpmath.workdps(dps):
        xs = [(2 * l - 1) * mpmath.pi / (4 * n) for l in range(1, n + 1)]
        f = mpmath.cot if which == "P" else (lambda x: 1 / mpmath.sin(x))
        return mpmath.fsum(f(x) ** (2 * k) for x in xs)


def close(value, exact, digits=45):
    with mpmath.workdps(70):
        x = mpmath.mpf(exact.numerator) / exact.denominator
        return abs(value - x) <= abs(x) * mpmath.mpf(10) ** -digits


def test_a_sequence_examples():
    assert a_sequence(1) == [2]
    assert a_sequence(2) == [2, Fraction(8, 3)]
    assert a_sequence(3)[2] == Fraction(64, 15)


def test_a_sequence_by_hand():
    # a_2 = -(4^2 * 2 / 4! - 4 / 2! * a_1)
    assert a_sequence(2)[1] == -(Fraction(32, 24) - Fraction(4, 2) * 2)


def test_a_sequence_is_prefix_stable():
    assert a_sequence(12)[:7] == a_sequence(7)


@pytest.mark.parametrize("k, r", [(1, Fraction(1, 6)), (2, Fraction(1, 90)), (3, Fraction(1, 945))])
def test_zeta_coefficient_examples(k, r):
    zc = zeta_coefficient(k)
    assert zc.r == r
    assert zc.a == zc.r * (4 ** (2 * k) - 4**k)


def test_zeta_coefficient_invariant_enforced():
    with pytest.raises(IdentityViolation):
        ZetaCoefficient(1, Fraction(1, 5), Fraction(2))


@pytest.mark.parametrize("k, r", [(1, Fraction(1, 6)), (2, Fraction(1, 90))])
def test_direct_examples(k, r):
    assert zeta_coefficient_direct(k) == r


@pytest.mark.parametrize(
    "k, r", [(1, Fraction(1, 6)), (2, Fraction(1, 90)), (5, Fraction(1, 93555))]
)
def test_bernoulli_oracle_examples(k, r):
    assert zeta_coefficient_bernoulli(k) == r


def test_bernoulli_oracle_by_hand():
    assert Fraction(5, 66) * 2**9 / factorial(10) == Fraction(1, 93555)


def test_triple_agreement():
    for k in range(1, 51):
        r = zeta_coefficient(k).r
        assert r == zeta_coefficient_direct(k) == zeta_coefficient_bernoulli(k)


def test_coefficients_against_mpmath_zeta():
    with mpmath.workdps(40):
        for k in range(1, 15):
            r = zeta_coefficient(k).r
            expected = mpmath.zeta(2 * k) / mpmath.pi ** (2 * k)
            assert abs(mpmath.mpf(r.numerator) / r.denominator - expected) < expected * 1e-35


def test_positivity():
    assert all(a > 0 for a in a_sequence(50))
    assert all(zeta_coefficient(k).r > 0 for k in (1, 10, 25, 50))


@pytest.mark.parametrize("fn", [a_sequence, zeta_coefficient, zeta_coefficient_direct,
                                zeta_coefficient_bernoulli])
def test_domain_errors(fn):
    with pytest.raises(DomainError):
        fn(0)


def test_e_cot_squared():
    assert e_cot_squared(0, 7) == 1
    assert e_cot_squared(1, 3) == 15
    assert e_cot_squared(5, 2) == 0
    with pytest.raises(DomainError):
        e_cot_squared(-1, 2)


def test_e_cot_squared_against_numeric_roots():
    n = 5
    with mpmath.workdps(50):
        ts = [mpmath.cot((2 * l - 1) * mpmath.pi / (4 * n)) ** 2 for l in range(1, n + 1)]
        coeffs = [mpmath.mpf(1)]
        for t in ts:
            coeffs = [a + t * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    for r in range(n + 1):
        assert close(coeffs[r], e_cot_squared(r, n), 40)


@pytest.mark.parametrize("k, n, expected", [(1, 1, 1), (1, 3, 15), (2, 2, 34)])
def test_p_exact_examples(k, n, expected):
    assert p_exact(k, n) == expected
    assert close(trig_sum(k, n, "P"), Fraction(expected))


@pytest.mark.parametrize("k, n, expected", [(1, 1, 2), (1, 3, 18), (2, 2, 48)])
def test_q_exact_examples(k, n, expected):
    assert q_exact(k, n) == expected
    assert close(trig_sum(k, n, "Q"), Fraction(expected))


def test_p_q_exact_against_trig_sums():
    for k in range(1, 7):
        for n in (1, 2, 3, 5, 8, 13):
            assert close(trig_sum(k, n, "P"), p_exact(k, n))
            assert close(trig_sum(k, n, "Q"), q_exact(k, n))


def test_q_exact_beyond_k_le_n():
    # n = 1: the only angle is pi/4, sin^-2 = 2.
    assert [q_exact(k, 1) for k in range(1, 6)] == [2, 4, 8, 16, 32]
    assert [p_exact(k, 1) for k in range(1, 6)] == [1] * 5


def test_shift_corollary():
    for k in range(1, 9):
        for n in range(k, 21):
            p = [Fraction(n)] + [p_exact(j, n) for j in range(1, k + 1)]
            assert q_exact(k, n) == sum(binomial(k, j) * p[j] for j in range(k + 1))


def test_monotone_gap():
    assert all(q_exact(k, n) - p_exact(k, n) > 0 for k in range(1, 9) for n in range(1, 21))


def test_fit_polynomial_examples():
    assert fit_polynomial("P", 1) == RationalPolynomial((0, -1, 2))
    assert fit_polynomial("Q", 1) == RationalPolynomial((0, 0, 2))


def test_sample_abscissae():
    assert sample_abscissae(3) == list(range(3, 11))
    assert len(sample_abscissae(5)) == 12


@pytest.mark.parametrize("kind", ["P", "Q"])
@pytest.mark.parametrize("k", range(1, 9))
def test_fit_polynomial_properties(kind, k):
    poly = fit_polynomial(kind, k)
    assert poly.degree == 2 * k
    assert poly.leading == a_sequence(k)[-1]
    exact = p_exact if kind == "P" else q_exact
    for n in range(3 * k + 2, 3 * k + 12):
        assert poly(n) == exact(k, n)


def test_fit_polynomial_holds_below_sampled_range():
    # The polynomial also matches at small n, outside the nodes n >= k.
    for k in (3, 5):
        for kind, exact in (("P", p_exact), ("Q", q_exact)):
            poly = fit_polynomial(kind, k)
            assert all(poly(n) == exact(k, n) for n in range(1, k))


def test_fit_polynomial_reports_violation(monkeypatch):
    import evenzeta.zeta as z

    monkeypatch.setattr(z, "p_exact", lambda k, n: Fraction(n) ** 5 if n == 3 * k + 1 else Fraction(n))
    with pytest.raises(IdentityViolation) as info:
        z.fit_polynomial("P", 1)
    assert set(info.value.values) == {"n", "sample", "polynomial"}
