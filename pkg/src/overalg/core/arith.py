"""
overalg.core.arith
==================

Complex special functions and quadrature rules used throughout the package.

All functions accept Python scalars or ``numpy`` arrays and act elementwise. Branch cuts are
principal (argument in ``(-pi, pi]``).

Classes
-------
QuadratureRule
    Nodes and weights of an interpolatory quadrature on an interval.

Functions
---------
pochhammer
    Rising factorial ``(a)_n``.
log_gamma
    Logarithm of the gamma function (Lanczos approximation).
gamma_abs2
    Squared modulus of the gamma function.
gauss_legendre
    Gauss-Legendre rule on an interval.
gauss_jacobi
    Gauss-Jacobi rule on ``[0, 1]`` for the weight ``(1 - t)**exponent``.
composite_legendre
    Gauss-Legendre rule repeated over equal panels.
integrate_until_stable
    Refinement loop doubling a discretisation until successive values agree.
"""
import logging
from dataclasses import dataclass
from typing import Any, Callable, Tuple

import numpy as np
from scipy.special import roots_jacobi

from overalg.core.errors.numerics import ConvergenceError, DomainError, PoleError
from overalg.core.errors.validation import RangeValidationError
from overalg.core.types import ComplexLike, FloatArray

logger = logging.getLogger(__name__)


# --- Rising Factorial -----------------------------------------------------------------------------

def pochhammer(a: ComplexLike, n: int) -> Any:
    """
    Rising factorial ``(a)_n = a (a+1) ... (a+n-1)``, with ``(a)_0 = 1``.

    Parameters
    ----------
    a : ComplexLike
        Base, scalar or array.
    n : int
        Number of factors, non-negative.

    Returns
    -------
    Any
        Same shape and kind as *a*.

    Examples
    --------
    >>> pochhammer(2, 3)
    24
    >>> pochhammer(0.5 + 1j, 2)
    (-0.25+2j)
    """
    if n < 0:
        raise RangeValidationError(n, ge=0, name="n")
    result = a * 0 + 1
    for j in range(n):
        result = result * (a + j)
    return result


# --- Gamma Function -------------------------------------------------------------------------------

LANCZOS_G = 7
LANCZOS_COEFFS = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])
_HALF_LOG_2PI = 0.5 * np.log(2 * np.pi)


def _lanczos_log_gamma(z: np.ndarray) -> np.ndarray:
    """Lanczos series for ``log Gamma(z)``, valid for ``Re z >= 1/2``."""
    z = z - 1
    series = np.full_like(z, LANCZOS_COEFFS[0])
    for i, coeff in enumerate(LANCZOS_COEFFS[1:], start=1):
        series = series + coeff / (z + i)
    t = z + LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * np.log(t) - t + np.log(series)


def log_gamma(z: ComplexLike) -> Any:
    """
    Principal-branch logarithm of the gamma function.

    Uses the Lanczos approximation (g = 7, nine coefficients) for ``Re z >= 1/2`` and the
    reflection formula ``log Gamma(z) = log(pi) - log(sin(pi z)) - log Gamma(1 - z)`` otherwise.

    Parameters
    ----------
    z : ComplexLike
        Argument(s), finite and off the non-positive integers.

    Returns
    -------
    complex | numpy.ndarray
        ``log Gamma(z)``, complex.

    Raises
    ------
    PoleError
        If an argument is a non-positive integer.
    DomainError
        If an argument is not finite.

    Examples
    --------
    >>> abs(log_gamma(1.0)) < 1e-14
    True
    >>> abs(log_gamma(0.5) - 0.5 * np.log(np.pi)) < 1e-14
    True
    """
    scalar = np.ndim(z) == 0
    arr = np.atleast_1d(np.asarray(z, dtype=complex))
    if not np.all(np.isfinite(arr)):
        raise DomainError(z, "finite argument")
    nearest = np.round(arr.real)
    at_pole = (nearest <= 0) & (np.abs(arr - nearest) < 1e-14)
    if np.any(at_pole):
        bad = arr[at_pole][0]
        raise PoleError(bad, pole=complex(np.round(bad.real)))
    result = np.empty_like(arr)
    reflect = arr.real < 0.5
    result[~reflect] = _lanczos_log_gamma(arr[~reflect])
    if np.any(reflect):
        w = arr[reflect]
        result[reflect] = np.log(np.pi) - np.log(np.sin(np.pi * w)) - _lanczos_log_gamma(1 - w)
    return complex(result[0]) if scalar else result.reshape(np.shape(z))


def gamma_abs2(z: ComplexLike) -> Any:
    """
    Squared modulus ``|Gamma(z)|**2``, computed as ``exp(2 Re log Gamma(z))``.

    Examples
    --------
    >>> abs(gamma_abs2(0.5 + 1j) - np.pi / np.cosh(np.pi)) < 1e-14
    True
    """
    return np.exp(2 * np.real(log_gamma(z)))


# --- Quadrature Rules -----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """
    Nodes and weights of a quadrature rule on an interval.

    Attributes
    ----------
    nodes : FloatArray
        Nodes, strictly inside ``interval``.
    weights : FloatArray
        Positive weights.
    order : int
        Number of nodes per panel.
    interval : Tuple[float, float]
        Integration interval.

    Methods
    -------
    integrate(func)
        Apply the rule to a vectorised integrand.
    scaled(a, b)
        Affine image of the rule on ``[a, b]``.
    """
    nodes: FloatArray
    weights: FloatArray
    order: int
    interval: Tuple[float, float] = (-1.0, 1.0)

    def integrate(self, func: Callable[[FloatArray], Any]) -> Any:
        """
        Apply the rule to ``func``, evaluated once on the array of nodes.

        The first axis of ``func(nodes)`` is contracted, so vector-valued integrands of shape
        ``(n, ...)`` are integrated componentwise.
        """
        values = np.asarray(func(self.nodes))
        total = np.tensordot(self.weights, values, axes=1)
        return total.item() if np.ndim(total) == 0 else total

    def scaled(self, a: float, b: float) -> "QuadratureRule":
        """Map the rule affinely onto ``[a, b]``."""
        lo, hi = self.interval
        factor = (b - a) / (hi - lo)
        return QuadratureRule(a + (self.nodes - lo) * factor, self.weights * factor, self.order,
                              (a, b))


def gauss_legendre(order: int, a: float = -1.0, b: float = 1.0) -> QuadratureRule:
    """
    Gauss-Legendre rule with ``order`` nodes on ``[a, b]``.

    The rule is exact for polynomials of degree at most ``2 * order - 1``.

    Examples
    --------
    >>> rule = gauss_legendre(2)
    >>> round(rule.integrate(lambda x: x**2), 12)
    0.666666666667
    """
    if order < 1:
        raise RangeValidationError(order, ge=1, name="order")
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return QuadratureRule(nodes, weights, order).scaled(a, b)


def gauss_jacobi(order: int, exponent: float) -> QuadratureRule:
    """
    Gauss-Jacobi rule on ``[0, 1]`` for the weight ``(1 - t)**exponent``.

    ``rule.integrate(g)`` approximates ``int_0^1 g(t) (1 - t)**exponent dt``; the weight is
    absorbed in the rule and must not be included in ``g``.

    Parameters
    ----------
    order : int
        Number of nodes.
    exponent : float
        Exponent of the boundary weight, ``> -1``.
    """
    if order < 1:
        raise RangeValidationError(order, ge=1, name="order")
    if not exponent > -1:
        raise RangeValidationError(exponent, gt=-1, name="exponent")
    nodes, weights = roots_jacobi(order, exponent, 0.0)
    # t = (x + 1) / 2 maps (1 - x)**e dx onto 2**(e + 1) (1 - t)**e dt
    return QuadratureRule((nodes + 1) / 2, weights * 2.0 ** (-exponent - 1), order, (0.0, 1.0))


def composite_legendre(order: int, a: float, b: float, panels: int) -> QuadratureRule:
    """
    Gauss-Legendre rule of a given order repeated on ``panels`` equal sub-intervals of ``[a, b]``.
    """
    if panels < 1:
        raise RangeValidationError(panels, ge=1, name="panels")
    base = gauss_legendre(order)
    edges = np.linspace(a, b, panels + 1)
    pieces = [base.scaled(lo, hi) for lo, hi in zip(edges[:-1], edges[1:])]
    return QuadratureRule(
        np.concatenate([p.nodes for p in pieces]),
        np.concatenate([p.weights for p in pieces]),
        order,
        (a, b),
    )


def integrate_until_stable(
    evaluate: Callable[[int], Any],
    start: int = 0,
    tol: float = 1e-12,
    max_refinements: int = 10,
    quantity: str = "integral",
) -> Tuple[Any, float, int]:
    """
    Refine a discretisation until two successive values agree.

    ``evaluate(level)`` is called for ``level = start, start + 1, ...``; each level is expected to
    double the resolution of the previous one.

    Parameters
    ----------
    evaluate : Callable[[int], Any]
        Value at a given refinement level (scalar or array).
    start : int, default 0
        First level.
    tol : float, default 1e-12
        Stop when successive values differ by less than ``tol * max(1, |value|)``.
    max_refinements : int, default 10
        Maximum number of refinements after the first level.
    quantity : str
        Name used in logs and errors.

    Returns
    -------
    value : Any
        Value at the last level.
    estimate : float
        Difference between the last two levels.
    level : int
        Last level.

    Raises
    ------
    ConvergenceError
        If the values are still changing after ``max_refinements`` refinements.
    """
    level = start
    previous = evaluate(level)
    estimate = np.inf
    for _ in range(max_refinements):
        level += 1
        current = evaluate(level)
        estimate = float(np.max(np.abs(np.asarray(current) - np.asarray(previous))))
        scale = max(1.0, float(np.max(np.abs(current))))
        logger.debug("%s: level %d, change %.3e", quantity, level, estimate)
        if estimate < tol * scale:
            return current, estimate, level
        previous = current
    raise ConvergenceError(quantity, estimate, level)
