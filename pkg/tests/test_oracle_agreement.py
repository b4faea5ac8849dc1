"""Guards for the frozen references and the oracle implementations
themselves."""

import math

import mpmath
import pytest

from eta_zeta import ComplexPoint, eta
from eta_zeta.acceptance import _ORACLE_GRID, _TABLE2_ODD_REFERENCE
from eta_zeta.zeta_bridge import LN2

import oracles


def test_frozen_grid_matches_live_oracle():
    for (sigma, t), (re_str, im_str) in _ORACLE_GRID.items():
        live = oracles.eta_reference(sigma, t)
        with mpmath.workdps(40):
            frozen = mpmath.mpc(mpmath.mpf(re_str), mpmath.mpf(im_str))
            assert abs(frozen - live) < mpmath.mpf("1e-30"), (sigma, t)


def test_accelerated_series_oracle_matches_mpmath():
    # the acceleration scheme is an independent route to the same values
    for sigma, t in ((0.5, 0.0), (1.0, 0.0), (0.5, 14.1), (0.75, 25.0),
                     (1.0, 40.0), (0.25, 5.0)):
        mine = oracles.eta_alternating_accelerated(sigma, t)
        ref = oracles.eta_reference(sigma, t)
        assert abs(mine - ref) < mpmath.mpf("1e-30"), (sigma, t)


def test_table2_reference_rows_except_the_misprint():
    # printed six-decimal rows agree with the oracle, row 7 aside
    for n, (re_ref, im_ref) in _TABLE2_ODD_REFERENCE.items():
        ref = oracles.eta_reference(1.0, n * math.pi / LN2)
        err = max(abs(float(ref.real) - re_ref), abs(float(ref.imag) - im_ref))
        if n == 7:
            assert err > 1.0  # the misprint is not a rounding artefact
        else:
            assert err <= 5e-7, n


def test_misprinted_row_equals_sigma_zero_value():
    # diagnosis of the row-7 misprint: the printed number is eta at sigma=0
    ref = oracles.eta_reference(0.0, 7.0 * math.pi / LN2)
    assert abs(float(ref.real) - 4.893007) <= 5e-7
    assert abs(float(ref.imag) - (-0.100872)) <= 5e-7


def test_library_row7_matches_true_value():
    v = eta(ComplexPoint(1.0, 7.0 * math.pi / LN2), m=50).value
    ref = oracles.eta_reference(1.0, 7.0 * math.pi / LN2)
    assert oracles.diff(v, ref) < 1e-11


def test_lowest_zero_reference_signs():
    # the double-precision evaluation reproduces the 30-digit oracle at the
    # rounded lowest critical zero, including the sign of the real part
    ref = oracles.eta_reference(0.5, 14.134725)
    assert float(ref.real) == pytest.approx(-1.6212e-8, abs=1e-11)
    assert float(ref.imag) == pytest.approx(-2.66350e-7, abs=1e-11)
    v = eta(ComplexPoint(0.5, 14.134725), m=40).value
    assert oracles.diff(v, ref) < 1e-10
