"""
test_overalg.test_validation.test_rules
=======================================

Tests for the overalg package (validation rules).

See Also
--------
overalg.validation.rules
"""
import pytest

from overalg.core.errors.validation import (
    CustomValidationError,
    OptionValidationError,
    RangeValidationError,
    TypeValidationError,
)
from overalg.validation.rules import CustomRule, OptionRule, RangeRule, TypeRule


# --- TypeRule -------------------------------------------------------------------------------------

@pytest.mark.parametrize("value, expected", [(2, True), (2.5, True), ("2", False), (True, False)])
def test_type_rule(value, expected):
    assert TypeRule((int, float)).check(value) is expected

def test_type_rule_accepts_bool_when_asked():
    assert TypeRule(int, reject_bool=False).check(True)

def test_type_rule_invalid_spec():
    with pytest.raises(TypeError):
        TypeRule("int")

def test_type_rule_error():
    assert isinstance(TypeRule(int).get_error("x"), TypeValidationError)
    assert TypeRule(int).get_error(3) is None


# --- RangeRule ------------------------------------------------------------------------------------

@pytest.mark.parametrize("value, expected", [(0.0, False), (0.05, True), (0.5, False)])
def test_range_rule_open_interval(value, expected):
    assert RangeRule(gt=0, lt=0.5).check(value) is expected

def test_range_rule_incomparable_value():
    """Test that a value of the wrong type fails instead of raising."""
    assert not RangeRule(gt=1).check("auto")

def test_range_rule_error_carries_name():
    error = RangeRule(gt=1, name="alpha").get_error(0.5)
    assert isinstance(error, RangeValidationError)
    assert str(error).startswith("alpha:")


# --- OptionRule and CustomRule --------------------------------------------------------------------

def test_option_rule():
    rule = OptionRule(["intertwine", "parseval"])
    assert rule.check("parseval")
    assert isinstance(rule.get_error("hahn"), OptionValidationError)

def test_option_rule_unhashable():
    assert not OptionRule(["a"]).check(["a"])

def test_custom_rule():
    def is_auto_or_positive(value):
        return value == "auto" or (isinstance(value, float) and value > 0)
    rule = CustomRule(is_auto_or_positive)
    assert rule.check("auto") and rule.check(30.0)
    assert isinstance(rule.get_error(-1.0), CustomValidationError)
