"""
test_overalg.test_core.test_numerics_errors
===========================================

Tests for the overalg package (numerical errors).

See Also
--------
overalg.core.errors.numerics
"""
import pytest

from overalg.core.errors.numerics import (
    AlphaMismatchError,
    BranchError,
    ConvergenceError,
    DegenerateDenominatorError,
    DomainError,
    NumericsError,
    PoleError,
    TailBoundError,
    UnmatchedPairError,
)


@pytest.mark.parametrize("error", [
    PoleError(0j, pole=0j, margin=0.05),
    DomainError(1.2, "|z| < 1"),
    BranchError(-0.5 + 0j),
    ConvergenceError("integral", 1e-3, 4),
    TailBoundError(2.0, 1e-3, 1e-12),
    AlphaMismatchError(2.0, 3.0),
    UnmatchedPairError("M0", "Q1"),
    DegenerateDenominatorError((0.5, -0.5, 0.5), 3),
])
def test_numerics_errors_share_base(error):
    """
    Test that every numerical error derives from `NumericsError` and `ArithmeticError` and
    renders a non-empty message.
    """
    assert isinstance(error, NumericsError)
    assert isinstance(error, ArithmeticError)
    assert str(error)

def test_pole_error_attributes():
    error = PoleError(0.01j, pole=0j, margin=0.05)
    assert error.value == 0.01j
    assert error.pole == 0j
    assert "0.05" in str(error)

def test_explicit_message_overrides_format():
    assert str(NumericsError("custom")) == "custom"
