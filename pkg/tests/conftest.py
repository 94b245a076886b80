from fractions import Fraction
from itertools import combinations
from math import prod

import pytest


def brute_elementary(ts):
    """e_0..e_n by summing products over all subsets."""
    n = len(ts)
    return [sum((prod(c, start=Fraction(1)) for c in combinations(ts, r)), Fraction(0))
            for r in range(n + 1)]


def expand_product(ts):
    """Coefficients of prod(t + t_i), highest power first; equals e_0..e_n."""
    coeffs = [Fraction(1)]
    for t in ts:
        nxt = coeffs + [Fraction(0)]
        for j, c in enumerate(coeffs):
            nxt[j + 1] += c * t
        coeffs = nxt
    return coeffs


@pytest.fixture
def variables_23():
    return [Fraction(2), Fraction(3)]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
