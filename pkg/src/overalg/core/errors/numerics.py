"""
overalg.core.errors.numerics
============================

Custom exceptions raised by numerical evaluations on the holomorphic and spectral sides.

Classes
-------
NumericsError
PoleError
DomainError
BranchError
ConvergenceError
TailBoundError
AlphaMismatchError
UnmatchedPairError
DegenerateDenominatorError
"""
from typing import Any, Optional


# --- Base Numerics Error --------------------------------------------------------------------------

class NumericsError(ArithmeticError):
    """
    Base class for errors raised by numerical routines.

    Parameters
    ----------
    message : str, optional
        Explicit error message. When ``None``, ``format_message`` is called.

    Attributes
    ----------
    message : str
        Human-readable description of the failure.
    """
    def __init__(self, message: Optional[str] = None):
        self.message = message or self.format_message()
        super().__init__(self.message)

    def format_message(self) -> str:
        """Format the default error message. Override in subclasses.

        Returns
        -------
        str
            Human-readable error message.
        """
        return "Numerical evaluation failed"


# --- Evaluation Errors ----------------------------------------------------------------------------

class PoleError(NumericsError):
    """
    Exception raised when a function is evaluated at (or too close to) one of its poles.

    Parameters
    ----------
    value : complex
        Evaluation point.
    pole : complex, optional
        Pole closest to the evaluation point, if known.
    margin : float, optional
        Exclusion radius around the pole.
    """
    def __init__(self, value: Any, pole: Optional[complex] = None, margin: Optional[float] = None):
        self.value = value
        self.pole = pole
        self.margin = margin
        super().__init__()

    def format_message(self) -> str:
        message = f"Evaluation at {self.value} hits a pole"
        if self.pole is not None:
            message += f" at {self.pole}"
        if self.margin is not None:
            message += f" (exclusion radius {self.margin})"
        return message + "."


class DomainError(NumericsError):
    """
    Exception raised when an argument lies outside the domain of a function.

    Parameters
    ----------
    value : Any
        Offending argument.
    constraint : str
        Description of the domain, e.g. ``"|z| < 1"``.
    """
    def __init__(self, value: Any, constraint: str):
        self.value = value
        self.constraint = constraint
        super().__init__()

    def format_message(self) -> str:
        return f"Argument {self.value} outside the domain: required {self.constraint}."


class BranchError(NumericsError):
    """
    Exception raised when the base of a principal power leaves the right half-plane.

    Parameters
    ----------
    base : complex
        Base whose real part is not positive.
    """
    def __init__(self, base: Any):
        self.base = base
        super().__init__()

    def format_message(self) -> str:
        return f"Base {self.base} of a principal power has non-positive real part."


class ConvergenceError(NumericsError):
    """
    Exception raised when a refinement loop reaches its cap without stabilising.

    Parameters
    ----------
    quantity : str
        Name of the quantity being refined.
    estimate : float
        Last difference between successive refinements.
    level : int
        Refinement level reached.
    """
    def __init__(self, quantity: str, estimate: float, level: int):
        self.quantity = quantity
        self.estimate = estimate
        self.level = level
        super().__init__()

    def format_message(self) -> str:
        return (f"{self.quantity} did not converge after {self.level} refinements "
                f"(last change {self.estimate:.3e}).")


class TailBoundError(NumericsError):
    """
    Exception raised when a truncated spectral integral leaves a tail above the target accuracy.

    Parameters
    ----------
    s_max : float
        Truncation point of the spectral integral.
    tail : float
        Bound on the neglected tail.
    target : float
        Accuracy required on the integral.
    """
    def __init__(self, s_max: float, tail: float, target: float):
        self.s_max = s_max
        self.tail = tail
        self.target = target
        super().__init__()

    def format_message(self) -> str:
        return (f"Truncation at s_max={self.s_max} leaves a tail bound {self.tail:.3e} "
                f"above the target {self.target:.3e}.")


# --- Consistency Errors ---------------------------------------------------------------------------

class AlphaMismatchError(NumericsError):
    """
    Exception raised when two objects attached to different weights are combined.

    Parameters
    ----------
    left, right : float
        Weights of the two operands.
    """
    def __init__(self, left: float, right: float):
        self.left = left
        self.right = right
        super().__init__()

    def format_message(self) -> str:
        return f"Operands carry different weights: alpha={self.left} and alpha={self.right}."


class UnmatchedPairError(NumericsError):
    """
    Exception raised when an algebra operator is paired with a spectral operator it does not
    correspond to.

    Parameters
    ----------
    algebra_op : Any
        Operator acting on the holomorphic side.
    spectral_op : Any
        Operator acting on the spectral side.
    """
    def __init__(self, algebra_op: Any, spectral_op: Any):
        self.algebra_op = algebra_op
        self.spectral_op = spectral_op
        super().__init__()

    def format_message(self) -> str:
        return f"No intertwining relation between {self.algebra_op} and {self.spectral_op}."


class DegenerateDenominatorError(NumericsError):
    """
    Exception raised when a lower parameter of a terminating hypergeometric sum makes a
    denominator vanish.

    Parameters
    ----------
    params : Any
        Parameter triple of the polynomial family.
    degree : int
        Degree of the polynomial being evaluated.
    """
    def __init__(self, params: Any, degree: int):
        self.params = params
        self.degree = degree
        super().__init__()

    def format_message(self) -> str:
        return f"Vanishing denominator for parameters {self.params} at degree {self.degree}."
