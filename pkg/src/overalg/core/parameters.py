"""
overalg.core.parameters
=======================

Declarative parameter containers used to describe and validate run configurations.

Notes
-----
- A ``Param`` holds a default value, an optional runtime value and the rules constraining it.
- A ``ParameterSet`` groups named parameters and supports attribute access
  (``params.alpha.get()``) and bulk updates from configuration sources.
- Validation is not performed by the containers themselves but by
  :class:`overalg.validation.validator.Validator`.

Classes
-------
Param
    Parameter with a default value and validation rules.
ParameterSet
    Named collection of parameters.
"""
from collections import UserDict
from collections.abc import Iterable, Mapping
from copy import deepcopy
from typing import Any, Dict, List, Optional, Self

from overalg.core.errors.handling import OverrideParameterError, UnknownParameterError
from overalg.core.types import RuleProtocol


class _Unset:
    """Sentinel distinguishing 'not set' from 'explicitly set to None'."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "<UNSET>"

    def __bool__(self) -> bool:
        return False

    def __deepcopy__(self, memo):
        return self


_UNSET = _Unset()


# --- Param Class ----------------------------------------------------------------------------------

class Param:
    """
    Parameter with a default value and constraints checked at validation time.

    Parameters
    ----------
    default : Any, optional
        Value used when no runtime value has been set.
    rules : Iterable[RuleProtocol], optional
        Constraints on the value.

    Attributes
    ----------
    default : Any
        Default value.
    rules : List[RuleProtocol]
        Registered constraints.

    Examples
    --------
    >>> alpha = Param(2.0, rules=[TypeRule((int, float)), RangeRule(gt=1)])
    >>> alpha.get()
    2.0
    >>> alpha.set(3.5).get()
    3.5
    """
    def __init__(self, default: Any = None, rules: Optional[Iterable[RuleProtocol]] = None) -> None:
        self._value: Any = _UNSET
        self.default = default
        self.rules: List[RuleProtocol] = []
        for rule in rules or ():
            self.register_rule(rule)

    def __repr__(self) -> str:
        return f"Param(default={self.default!r}, value={self._value!r})"

    def set(self, value: Any, strict: bool = False) -> "Param":
        """
        Set the runtime value.

        Parameters
        ----------
        value : Any
            Value to set.
        strict : bool, default False
            Validate the value against the rules before setting it.

        Returns
        -------
        Param
            Self, for chaining.

        Raises
        ------
        ValidationError
            If ``strict`` and a rule fails.
        """
        if strict:
            self.validate_value(value)
        self._value = value
        return self

    def validate_value(self, value: Any) -> None:
        """
        Validate a value against all registered rules, raising the first failure.

        Parameters
        ----------
        value : Any
            Value to validate.
        """
        for rule in self.rules:
            error = rule.get_error(value)
            if error is not None:
                raise error

    @property
    def is_set(self) -> bool:
        """Whether a runtime value has been assigned (even ``None``)."""
        return self._value is not _UNSET

    def get(self) -> Any:
        """
        Retrieve the runtime value if set, otherwise the default.

        Returns
        -------
        Any
            Effective value of the parameter.
        """
        return self._value if self.is_set else self.default

    def reset(self) -> None:
        """Discard the runtime value."""
        self._value = _UNSET

    def register_rule(self, rule: RuleProtocol) -> None:
        """
        Add a rule constraining the parameter.

        Raises
        ------
        TypeError
            If *rule* does not satisfy the ``RuleProtocol``.
        """
        if not isinstance(rule, RuleProtocol):
            raise TypeError(
                f"Rule '{rule.__class__.__name__}' does not satisfy RuleProtocol "
                f"(must implement check() and get_error())."
            )
        self.rules.append(rule)

    def copy(self) -> Self:
        """Deep copy of the parameter and its rules."""
        return deepcopy(self)


# --- ParameterSet Class ---------------------------------------------------------------------------

class ParameterSet(UserDict[str, Param]):
    """
    Named collection of parameters.

    Parameters
    ----------
    *args : dict
        Optional mapping of names to ``Param`` objects (or raw defaults).
    **kwargs : Param | Any
        Parameters by name. Raw values are wrapped as ``Param(default=value)``.

    Methods
    -------
    add(name, param)
        Declare a new parameter.
    get(name) -> Any
        Effective value of a parameter.
    set(name, value)
        Set the runtime value of a declared parameter.
    update_values(values, source)
        Set several runtime values, rejecting undeclared names.
    to_values() -> Dict[str, Any]
        Effective values of all parameters.

    Examples
    --------
    >>> params = ParameterSet(alpha=Param(2.0, rules=[RangeRule(gt=1)]), seed=0)
    >>> params.set("alpha", 3.0)
    >>> params.alpha.get()
    3.0
    >>> params.to_values()
    {'alpha': 3.0, 'seed': 0}
    """
    _RESERVED_ATTRS = frozenset({"data", "_RESERVED_ATTRS"})

    def __init__(self, *args: Mapping[str, Any], **kwargs: Any):
        super().__init__()
        candidates = dict(args[0]) if args and isinstance(args[0], Mapping) else kwargs
        for name, param in candidates.items():
            self.add(name, param)

    def add(self, name: str, param: Any) -> None:
        """
        Declare a new parameter under a unique name.

        Raises
        ------
        OverrideParameterError
            If *name* is already declared.
        """
        if name in self.data:
            raise OverrideParameterError(name)
        self.data[name] = param if isinstance(param, Param) else Param(default=param)

    def __setitem__(self, name: str, param: Any) -> None:
        self.add(name, param)

    def __getattr__(self, name: str) -> Param:
        if name.startswith("_") or "data" not in self.__dict__:
            raise AttributeError(f"'{type(self).__name__}' object has no attribute '{name}'")
        if name in self.data:
            return self.data[name]
        raise AttributeError(f"No parameter '{name}' in the ParameterSet.")

    def __setattr__(self, name: str, value: Any) -> None:
        if name in ParameterSet._RESERVED_ATTRS or name.startswith("_") or "data" not in self.__dict__:
            object.__setattr__(self, name, value)
            return
        self.set(name, value)

    def get(self, name: str) -> Any:  # type: ignore[override]
        """Effective value of a declared parameter."""
        if name not in self.data:
            raise UnknownParameterError(name, self.data)
        return self.data[name].get()

    def set(self, name: str, value: Any) -> None:
        """
        Set the runtime value of a declared parameter.

        Raises
        ------
        UnknownParameterError
            If *name* is not declared.
        """
        if name not in self.data:
            raise UnknownParameterError(name, self.data)
        self.data[name].set(value)

    def update_values(self, values: Mapping[str, Any], source: Optional[str] = None) -> None:
        """
        Set several runtime values at once.

        Parameters
        ----------
        values : Mapping[str, Any]
            New values by parameter name.
        source : str, optional
            Origin of the values, quoted in errors.

        Raises
        ------
        UnknownParameterError
            On the first undeclared name; no value is set in that case.
        """
        for name in values:
            if name not in self.data:
                raise UnknownParameterError(name, self.data, source=source)
        for name, value in values.items():
            self.data[name].set(value)

    def to_values(self) -> Dict[str, Any]:
        """Effective values of all parameters, in declaration order."""
        return {name: param.get() for name, param in self.data.items()}
