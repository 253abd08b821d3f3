"""
test_overalg.test_spectral.test_hahn
====================================

Tests for the overalg package (continuous dual Hahn identification).

See Also
--------
overalg.spectral.hahn
"""
import math

import numpy as np
import pytest

from overalg.core.arith import pochhammer
from overalg.core.errors.numerics import DegenerateDenominatorError
from overalg.core.errors.validation import RangeValidationError
from overalg.spectral.hahn import (
    MAX_DEGREE,
    CdhParams,
    candidate_params,
    cdh_difference_residual,
    cdh_eval,
    cdh_match_report,
    cdh_recurrence,
    fitted_degree,
    mode_zero_orthogonality,
    mode_zero_profile,
    q0_eigen_residual,
)

PARAMS = CdhParams(0.5, 1.5, 0.5)
S = np.linspace(0.1, 5.0, 50)


# --- Polynomials ----------------------------------------------------------------------------------

def test_degree_zero_is_one():
    assert cdh_eval(0, PARAMS, 2.0) == 1

def _absolute_terms(n, params, s):
    """Sum of the moduli of the terms of the terminating sum, which sets its conditioning."""
    a, b, c = params.as_tuple()
    s = np.asarray(s, dtype=complex)
    return sum(
        np.abs(pochhammer(-n, j) * pochhammer(a + 1j * s, j) * pochhammer(a - 1j * s, j)
               / (pochhammer(a + b, j) * pochhammer(a + c, j) * math.factorial(j)))
        for j in range(n + 1)
    )

@pytest.mark.parametrize("n", range(MAX_DEGREE + 1))
def test_recurrence_matches_sum(n):
    """
    Test the recurrence against the sum up to the largest degree, relative to the size of the
    alternating terms.
    """
    s = np.linspace(0.1, 3.0, 60)
    diff = np.abs(cdh_recurrence(n, PARAMS, s) - cdh_eval(n, PARAMS, s))
    assert np.all(diff <= 1e-11 * _absolute_terms(n, PARAMS, s))

@pytest.mark.parametrize("n", range(7))
def test_difference_equation(n):
    assert cdh_difference_residual(n, PARAMS, S) < 1e-10

def test_degree_out_of_range():
    with pytest.raises(RangeValidationError):
        cdh_eval(13, PARAMS, 1.0)

def test_degenerate_denominator():
    with pytest.raises(DegenerateDenominatorError):
        cdh_eval(2, CdhParams(0.5, -0.5, 1.0), 1.0)

def test_positive():
    assert PARAMS.positive
    assert not CdhParams(-0.5, 0.5, 0.5).positive


# --- Zero Mode ------------------------------------------------------------------------------------

@pytest.mark.parametrize("k", range(11))
def test_q0_eigen_equation(k, alpha):
    assert q0_eigen_residual(k, alpha) < 1e-8

@pytest.mark.parametrize("k", range(5))
def test_profile_degree(k):
    """``g_k`` is a polynomial of degree ``k`` in ``s**2``."""
    values = mode_zero_profile(k, 2.0)(S)
    assert fitted_degree(values, S) == k

def test_fitted_degree_exhausted():
    with pytest.raises(RangeValidationError):
        fitted_degree(np.exp(S), S, max_degree=3)

def test_candidate_params():
    candidates = candidate_params(2.0)
    assert len(candidates) == 4 * 10
    assert all(c.b <= c.c for c in candidates)
    assert CdhParams(0.5, 0.5, 1.5) in candidates


# --- Identification -------------------------------------------------------------------------------

@pytest.mark.parametrize("alpha_value", [2.0, 2.75])
def test_best_match(alpha_value):
    report = cdh_match_report(alpha_value, 6)
    best = report.best
    assert sorted(best.params.as_tuple()) == sorted([0.5, 0.5, alpha_value - 0.5])
    assert best.max_residual <= 1e-8
    assert best.slope == pytest.approx(2.0, abs=1e-8)
    assert best.intercept == pytest.approx(alpha_value, abs=1e-8)

def test_match_report_serialisable():
    data = cdh_match_report(2.0, 2).to_dict()
    assert data["n_max"] == 2
    assert len(data["candidates"]) == len(candidate_params(2.0))
    degenerate = [c for c in data["candidates"] if c["max_residual"] is None]
    assert all(c["slope"] is None for c in degenerate)

def test_match_report_degree_zero():
    report = cdh_match_report(2.0, 0)
    assert math.isnan(report.best.slope)
    assert report.best.intercept == pytest.approx(2.0, abs=1e-8)

@pytest.mark.parametrize("k, l", [(0, 1), (1, 2), (0, 3)])
def test_mode_zero_orthogonality(k, l):
    assert mode_zero_orthogonality(k, l, 2.0) < 1e-9

@pytest.mark.slow
def test_mode_zero_orthogonality_up_to_six(alpha):
    for k in range(7):
        for l in range(k + 1, 7):
            assert mode_zero_orthogonality(k, l, alpha) < 1e-8
