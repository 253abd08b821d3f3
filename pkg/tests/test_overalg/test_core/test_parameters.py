"""
test_overalg.test_core.test_parameters
======================================

Tests for the overalg package (core parameters).

See Also
--------
overalg.core.parameters
"""
import pytest

from overalg.core.errors.handling import OverrideParameterError, UnknownParameterError
from overalg.core.errors.validation import RangeValidationError
from overalg.core.parameters import Param, ParameterSet
from overalg.validation.rules import RangeRule, TypeRule


# --- Tests for the Param class --------------------------------------------------------------------


class TestParam:
    """Tests for the Param class."""

    def test_param_default_value(self):
        param = Param(default=2.0)
        assert param.get() == 2.0
        assert not param.is_set

    def test_param_no_default(self):
        """Test parameter with no default returns None."""
        assert Param().get() is None

    def test_param_value_overrides_default(self):
        param = Param(default=2.0)
        param.set(3.5)
        assert param.get() == 3.5
        assert param.is_set

    def test_param_explicit_none_is_set(self):
        """Test that setting None is distinguished from leaving the value unset."""
        param = Param(default="report.json")
        param.set(None)
        assert param.is_set
        assert param.get() is None

    def test_param_reset(self):
        param = Param(default=1).set(5)
        param.reset()
        assert param.get() == 1

    def test_param_strict_set_validates(self):
        """Test that a strict assignment raises the first failing rule."""
        param = Param(default=2.0, rules=[TypeRule((int, float)), RangeRule(gt=1)])
        with pytest.raises(RangeValidationError):
            param.set(0.5, strict=True)
        assert param.get() == 2.0

    def test_param_register_rule_type_check(self):
        """Test that only objects satisfying the rule protocol can be registered."""
        param = Param()
        with pytest.raises(TypeError):
            param.register_rule("not a rule")

    def test_param_copy(self):
        """Test deep copying a parameter."""
        param = Param(default=42, rules=[TypeRule(int)])
        param.set(100)
        copied = param.copy()
        copied.set(200)
        assert param.get() == 100
        assert len(copied.rules) == 1


# --- Tests for the ParameterSet class -------------------------------------------------------------


class TestParameterSet:
    """Tests for the ParameterSet class."""

    @pytest.fixture
    def params(self):
        return ParameterSet(alpha=Param(2.0, rules=[RangeRule(gt=1)]), seed=0)

    def test_raw_values_are_wrapped(self, params):
        assert isinstance(params["seed"], Param)
        assert params.to_values() == {"alpha": 2.0, "seed": 0}

    def test_attribute_access(self, params):
        assert params.alpha.get() == 2.0

    def test_attribute_assignment_sets_value(self, params):
        params.alpha = 3.0
        assert params.get("alpha") == 3.0

    def test_unknown_attribute(self, params):
        with pytest.raises(AttributeError):
            _ = params.beta

    def test_duplicate_declaration(self, params):
        with pytest.raises(OverrideParameterError):
            params.add("alpha", Param(3.0))

    def test_set_unknown(self, params):
        with pytest.raises(UnknownParameterError):
            params.set("beta", 1)

    def test_update_values_is_atomic(self, params):
        """Test that no value is set when one name is unknown."""
        with pytest.raises(UnknownParameterError) as info:
            params.update_values({"alpha": 3.0, "beta": 1}, source="run.yaml")
        assert info.value.source == "run.yaml"
        assert params.get("alpha") == 2.0

    def test_update_values(self, params):
        params.update_values({"alpha": 3.0, "seed": 7})
        assert params.to_values() == {"alpha": 3.0, "seed": 7}
