"""
test_overalg.test_core.test_validation_errors
=============================================

Tests for the overalg package (validation and handling errors).

This test module performs unit tests for the base error class and each specific error subclass.

See Also
--------
overalg.core.errors.validation
overalg.core.errors.handling
"""
import pytest

from overalg.core.errors.validation import (
    CheckError,
    CustomValidationError,
    GlobalValidationError,
    OptionValidationError,
    RangeValidationError,
    TypeValidationError,
    ValidationError,
)
from overalg.core.errors.handling import OverrideParameterError, UnknownParameterError


# --- Tests for the base ValidationError class -----------------------------------------------------

@pytest.fixture
def error_message():
    """
    Fixture to generate a test error message.

    Returns
    -------
    str
        Test error message.
    """
    return "Test error message"

def test_validation_error(error_message):
    """
    Test the base `ValidationError` class with a custom error message.
    """
    error = ValidationError(error_message)
    assert str(error) == error_message
    assert error.message == error_message

def test_default_message():
    """
    Test that the base message is generated by the `format_message` method of the
    `ValidationError` class when no custom message is provided.
    """
    error = ValidationError()
    assert str(error) == error.format_message()

# --- Tests for single-value ValidationError subclasses --------------------------------------------

def test_type_validation_error_multiple_types():
    """
    Test the `TypeValidationError` message with a tuple of accepted types.
    """
    error = TypeValidationError("2", (int, float))
    assert str(error) == "Type 'str' for value 2, required 'int' or 'float'."

def test_range_validation_error():
    """
    Test the `RangeValidationError` class with inclusive and exclusive bounds.
    """
    error = RangeValidationError(-1, ge=0, lt=10) # value -1 not in [0, 10)
    assert error.value == -1
    assert ">= 0" in str(error) and "< 10" in str(error)

def test_range_validation_error_named():
    """
    Test that the name of the quantity prefixes the message.
    """
    error = RangeValidationError(0.5, gt=1, name="alpha")
    assert str(error) == "alpha: value 0.5 out of bounds: required > 1."

def test_option_validation_error():
    """
    Test the `OptionValidationError` class lists the allowed options in a stable order.
    """
    error = OptionValidationError("A", {"C", "B"})
    assert error.options == ["B", "C"]
    with pytest.raises(OptionValidationError):
        raise error

def test_custom_validation_error():
    """
    Test the `CustomValidationError` class names the predicate in its message.
    """
    def is_even(value):
        return value % 2 == 0
    error = CustomValidationError(3, is_even)
    assert "is_even" in str(error)

# --- Tests for aggregate ValidationError subclasses -----------------------------------------------

def test_check_error():
    try:
        raise ValueError("Original exception")
    except ValueError as e:
        error = CheckError(e)
    assert str(error) == "Execution failed for validation check: Original exception"

def test_global_validation_error():
    errors = [ValidationError("Error 1"), ValidationError("Error 2")]
    error = GlobalValidationError(errors)
    assert str(error) == "Error 1\nError 2"

# --- Tests for handling errors --------------------------------------------------------------------

def test_override_parameter_error():
    error = OverrideParameterError("alpha")
    assert "alpha" in str(error)

def test_unknown_parameter_error_message():
    """
    Test that `UnknownParameterError` is a `KeyError` with an unquoted message naming the source
    and the declared parameters.
    """
    error = UnknownParameterError("alfa", known=["seed", "alpha"], source="run.yaml")
    assert isinstance(error, KeyError)
    assert str(error) == ("No parameter 'alfa' in the run configuration (from run.yaml); "
                          "expected one of ['alpha', 'seed'].")
