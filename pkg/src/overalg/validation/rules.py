"""
overalg.validation.rules
========================

Validation rules constraining single configuration values.

Usage
-----
1. Define a constraint by instantiating the appropriate rule class:

>>> alpha_rule = RangeRule(gt=1)
>>> suite_rule = OptionRule({"intertwine", "parseval"})

2. Check a value, or retrieve the error describing the failure:

>>> alpha_rule.check(0.5)
False
>>> print(alpha_rule.get_error(0.5).message)
Value 0.5 out of bounds: required > 1.

Classes
-------
Rule
    Base class for all validation rules.
SingleValueRule
    Base class for rules checking a single value.
TypeRule
    Check the type of a value.
RangeRule
    Check that a number lies within bounds.
OptionRule
    Check membership in a set of allowed values.
CustomRule
    Check a value with an arbitrary predicate.
"""
from abc import ABC, abstractmethod
from collections.abc import Iterable
from typing import Any, Callable, Generic, Optional, TypeVar

from overalg.core.errors.validation import (
    ValidationError,
    TypeValidationError,
    RangeValidationError,
    OptionValidationError,
    CustomValidationError,
)

E = TypeVar("E", bound=ValidationError)


# --- Base Rules -----------------------------------------------------------------------------------

class Rule(ABC, Generic[E]):
    """
    Base class for all validation rules.

    Methods
    -------
    check(*values) -> bool
        (Abstract) Check the validity of input values.
    get_error(*values) -> ValidationError | None
        ``None`` when the check passes, otherwise the specific error of the rule.
    create_error(*values) -> ValidationError
        (Abstract) Build the error describing a failure.
    """

    @abstractmethod
    def check(self, *args, **kwargs) -> bool:
        """Check the validity of input values."""

    def get_error(self, *args, **kwargs) -> E | None:
        """Create the error only if validation fails.

        Returns
        -------
        E | None
            A validation error when the check fails, ``None`` otherwise.
        """
        if self.check(*args, **kwargs):
            return None
        return self.create_error(*args, **kwargs)

    @abstractmethod
    def create_error(self, *args, **kwargs) -> E:
        """Create the specific error associated with a failure of the rule."""

    def __repr__(self) -> str:
        attrs = ", ".join(f"{k}={v!r}" for k, v in vars(self).items() if v is not None)
        return f"{type(self).__name__}({attrs})"


class SingleValueRule(Rule[E]):
    """
    Rule checking the validity of a single value.
    """
    @abstractmethod
    def check(self, value) -> bool:
        """Check the validity of a single value."""

    @abstractmethod
    def create_error(self, value) -> E:
        """Create the error for a single failed value."""


# --- Concrete Rules -------------------------------------------------------------------------------

class TypeRule(SingleValueRule[TypeValidationError]):
    """
    Rule checking if a value has a specific type.

    Parameters
    ----------
    expected_type : type | tuple[type, ...]
        Required type(s). A tuple accepts any of its members.
    reject_bool : bool, default True
        Reject ``True``/``False`` even when ``int`` is accepted.

    Raises
    ------
    TypeError
        If the expected type is not a type or a tuple of types.

    Examples
    --------
    >>> TypeRule(int).check(True)
    False
    >>> TypeRule((int, float)).check(2)
    True
    """
    def __init__(self, expected_type: type | tuple[type, ...], reject_bool: bool = True):
        if not isinstance(expected_type, (type, tuple)):
            raise TypeError(f"Expected a type or a tuple of types, got {type(expected_type)}")
        self.expected_type = expected_type
        self.reject_bool = reject_bool

    def check(self, value) -> bool:
        if self.reject_bool and isinstance(value, bool) and self.expected_type is not bool:
            return False
        return isinstance(value, self.expected_type)

    def create_error(self, value) -> TypeValidationError:
        return TypeValidationError(value, self.expected_type)


class RangeRule(SingleValueRule[RangeValidationError]):
    """
    Rule checking if a number lies within bounds.

    Parameters
    ----------
    ge, gt, le, lt : float, optional
        Inclusive and exclusive lower and upper bounds.
    name : str, optional
        Name of the constrained quantity, quoted in the error message.

    Examples
    --------
    >>> rule = RangeRule(gt=0, lt=0.5)
    >>> rule.check(0.5)
    False
    """
    def __init__(self,
                 ge: Optional[float] = None,
                 gt: Optional[float] = None,
                 le: Optional[float] = None,
                 lt: Optional[float] = None,
                 name: Optional[str] = None,
                ):
        self.ge = ge
        self.gt = gt
        self.le = le
        self.lt = lt
        self.name = name

    def check(self, value) -> bool:
        constraints = [
            (self.gt, lambda v, c: v > c),
            (self.ge, lambda v, c: v >= c),
            (self.lt, lambda v, c: v < c),
            (self.le, lambda v, c: v <= c)
        ]
        try:
            return all(func(value, bound) for bound, func in constraints if bound is not None)
        except TypeError:
            # comparison not supported between value type and bound type
            return False

    def create_error(self, value) -> RangeValidationError:
        return RangeValidationError(value, ge=self.ge, gt=self.gt, le=self.le, lt=self.lt,
                                    name=self.name)


class OptionRule(SingleValueRule[OptionValidationError]):
    """
    Rule checking if a value belongs to a set of allowed options.

    Parameters
    ----------
    options : Iterable
        Allowed values.

    Examples
    --------
    >>> OptionRule(["all", "eigen"]).check("hahn")
    False
    """
    def __init__(self, options: Iterable):
        self.options = frozenset(options)

    def check(self, value) -> bool:
        try:
            return value in self.options
        except TypeError:  # unhashable value
            return False

    def create_error(self, value) -> OptionValidationError:
        return OptionValidationError(value, self.options)


class CustomRule(SingleValueRule[CustomValidationError]):
    """
    Rule checking a value with an arbitrary predicate.

    Parameters
    ----------
    func : Callable[[Any], bool]
        Predicate returning ``True`` for valid values.

    Examples
    --------
    >>> def is_auto_or_positive(value):
    ...     return value == "auto" or (isinstance(value, float) and value > 0)
    >>> CustomRule(is_auto_or_positive).check("auto")
    True
    """
    def __init__(self, func: Callable[[Any], bool]):
        self.func = func

    def check(self, value) -> bool:
        return bool(self.func(value))

    def create_error(self, value) -> CustomValidationError:
        return CustomValidationError(value, self.func)
