"""
overalg.core.types
==================

Shared type definitions for the overalg package.

Type Aliases
------------
ComplexLike
    Scalar or array accepted by the complex special functions.
ComplexArray
    Array of complex numbers.
FloatArray
    Array of real numbers.

Classes
-------
RuleProtocol
    Structural protocol for validation rules used by core parameter classes.
"""
from typing import Any, Protocol, TypeAlias, runtime_checkable

import numpy as np
from numpy.typing import NDArray


# --- Type Aliases ---------------------------------------------------------------------------------

ComplexArray: TypeAlias = NDArray[np.complex128]
"""Array of complex numbers (coefficients, spectral values)."""

FloatArray: TypeAlias = NDArray[np.float64]
"""Array of real numbers (quadrature nodes and weights, spectral grids)."""

ComplexLike: TypeAlias = complex | float | np.number | NDArray[Any]
"""Scalar or array input of the elementwise special functions."""


# --- Protocols ------------------------------------------------------------------------------------

@runtime_checkable
class RuleProtocol(Protocol):
    """
    Structural protocol for single-value validation rules.

    Any object implementing ``check`` and ``get_error`` can constrain a ``Param``.
    """

    def check(self, value: Any) -> bool:
        """Return ``True`` if *value* satisfies the rule."""
        ...

    def get_error(self, value: Any) -> Exception | None:
        """Return an error if *value* fails, otherwise ``None``."""
        ...
