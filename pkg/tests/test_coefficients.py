import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from eta_zeta import (ComplexPoint, DomainError, bernoulli_numbers,
                      c_coefficient, p_coefficient_asymptotic, p_coefficients)

# Published table for the kernel-series coefficients: exact rationals and the
# decimals printed alongside them (finite-digit rows only).
TABLE_RATIONALS = (
    Fraction(1, 2), Fraction(1, 4), Fraction(-1, 48), Fraction(1, 480),
    Fraction(-17, 80640), Fraction(31, 1451520), Fraction(-691, 319334400),
    Fraction(5461, 24908083200),
)
TABLE_DECIMALS = {
    4: (-2.10813492e-4, 1e-12),
    5: (2.1356922e-5, 1e-12),
    6: (-2.163876e-6, 1e-12),
    7: (2.19246e-7, 1e-12),
}


def test_bernoulli_examples():
    assert bernoulli_numbers(1) == [float(Fraction(1, 6))]
    assert bernoulli_numbers(3) == [float(Fraction(1, 6)),
                                    float(Fraction(-1, 30)),
                                    float(Fraction(1, 42))]
    assert bernoulli_numbers(7)[-1] == float(Fraction(7, 6))


def test_bernoulli_against_sympy():
    # independent oracle for the recurrence
    values = bernoulli_numbers(15)
    for r, value in enumerate(values, start=1):
        assert value == float(sympy.bernoulli(2 * r))


@pytest.mark.parametrize("bad", [0, -3, 16])
def test_bernoulli_rejects_out_of_range(bad):
    with pytest.raises(DomainError):
        bernoulli_numbers(bad)


def test_p_table_matches_published_rationals():
    table = p_coefficients(7)
    assert table.p[0] == 0.5
    for r, ref in enumerate(TABLE_RATIONALS):
        assert table.p[r] == pytest.approx(float(ref), rel=1e-15, abs=0.0)


def test_p_table_matches_published_decimals():
    table = p_coefficients(7)
    for r, (ref, unit) in TABLE_DECIMALS.items():
        assert abs(table.p[r] - ref) <= unit


def test_p_table_invariants():
    table = p_coefficients(15)
    assert table.p[0] == 0.5
    for r in range(1, 16):
        expected_sign = 1.0 if r % 2 == 1 else -1.0
        assert math.copysign(1.0, table.p[r]) == expected_sign
        if r >= 2:
            assert abs(table.p[r]) < abs(table.p[r - 1])


def test_p_table_bernoulli_entries():
    table = p_coefficients(7)
    assert table.bernoulli == tuple(bernoulli_numbers(7))
    assert table.r_max == 7


def test_asymptotic_examples():
    assert p_coefficient_asymptotic(1) == pytest.approx(2.0 / math.pi ** 2)
    assert p_coefficient_asymptotic(1) == pytest.approx(0.202642, abs=5e-7)
    # sign alternation matches the exact coefficients
    assert p_coefficient_asymptotic(2) == pytest.approx(-2.0532e-2, abs=5e-6)
    assert p_coefficient_asymptotic(2) < 0 and p_coefficients(7).p[2] < 0
    assert p_coefficient_asymptotic(7) == pytest.approx(2.1925e-7, abs=5e-11)


def test_asymptotic_relative_error_decreases():
    table = p_coefficients(7)
    previous = math.inf
    for r in range(1, 8):
        rel = abs(p_coefficient_asymptotic(r) - table.p[r]) / abs(table.p[r])
        assert rel < previous
        if r >= 4:
            assert rel < 2e-3
        previous = rel
    # at r = 7 the asymptotic form is within 0.01%
    assert previous < 1e-4


def test_asymptotic_rejects_bad_r():
    with pytest.raises(DomainError):
        p_coefficient_asymptotic(0)


def test_c_coefficient_examples():
    assert c_coefficient(1, ComplexPoint(1, 0)) == pytest.approx(1.0 / 12.0)
    assert c_coefficient(1, ComplexPoint(0, 0)) == 0.0
    assert c_coefficient(2, ComplexPoint(1, 0)) == pytest.approx(0.0125)


def test_c_coefficient_rejects_bad_k():
    with pytest.raises(DomainError):
        c_coefficient(0, ComplexPoint(1, 0))


@given(k=st.integers(min_value=1, max_value=6),
       sigma=st.floats(-3, 3, allow_nan=False),
       t=st.floats(-30, 30, allow_nan=False))
def test_c_coefficient_conjugation(k, sigma, t):
    # polynomial with real coefficients: c(k, conj s) = conj(c(k, s))
    plus = c_coefficient(k, ComplexPoint(sigma, t))
    minus = c_coefficient(k, ComplexPoint(sigma, -t))
    assert abs(minus - plus.conjugate()) <= 2e-16 * abs(plus)
