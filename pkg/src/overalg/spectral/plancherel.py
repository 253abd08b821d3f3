"""
overalg.spectral.plancherel
===========================

Plancherel density of the spectral side, weighted inner products of spectral functions and the
Parseval checks of the transform.

The density is

``rho(s) = |Gamma(alpha - 1/2 + i s)|^2 / Gamma(alpha)^2 * s tanh(pi s)``

and satisfies ``int_0^inf rho(s) ds = 1/2``, so that the transform multiplies norms by the
constant ``C(alpha) = pi (pi / (alpha - 1))**4``.

Classes
-------
PlancherelWeight
    Callable density for a fixed weight.
ParsevalResult
    Outcome of a Parseval check.
SymmetryReport
    Observed mismatch between ``|F(phi, s)|`` and ``|F(phi, -s)|``.

Functions
---------
plancherel_weight
    Density from the hyperbolic-tangent form.
plancherel_weight_product_form
    Density from the product of four gamma factors.
parseval_constant
    Closed-form ratio between spectral and holomorphic norms.
spectral_inner
    Weighted inner product over ``[0, s_max] x [0, 2 pi)``.
choose_s_max
    Truncation point controlled by a tail bound.
parseval_check
    Ratio between the spectral norm of ``J f`` and the norm of ``f``.
cross_parseval
    Polarised version of the Parseval check.
symmetry_report
    Compare ``F(phi, s)`` and ``F(phi, -s)`` in modulus.
morera_residual
    Contour integral of a kernel coefficient around a square.
"""
import logging
import math
from dataclasses import dataclass
from typing import Any, Iterable, Optional

import numpy as np

from overalg.core.arith import composite_legendre, gauss_legendre, integrate_until_stable, log_gamma
from overalg.core.errors.numerics import AlphaMismatchError, TailBoundError
from overalg.model.holomorphic import Alpha, CoefMatrix, inner_product
from overalg.spectral.kernel import kernel_coeff_table
from overalg.spectral.transform import SpectralFunction, transform

logger = logging.getLogger(__name__)

QUADRATURE_ORDER = 20
PANEL_WIDTH = 1.0
S_MAX_LIMIT = 400.0


# --- Density --------------------------------------------------------------------------------------

def plancherel_weight(s: Any, alpha: "Alpha | float") -> Any:
    """
    Plancherel density from the hyperbolic-tangent form.

    Examples
    --------
    >>> plancherel_weight(0.0, 2.0)
    0.0
    """
    a = Alpha.coerce(alpha)
    s = np.asarray(s, dtype=float)
    log_ratio = 2 * np.real(log_gamma(a - 0.5 + 1j * s)) - 2 * np.real(log_gamma(a))
    value = np.exp(log_ratio) * s * np.tanh(np.pi * s)
    return float(value) if value.ndim == 0 else value


def plancherel_weight_product_form(s: Any, alpha: "Alpha | float") -> Any:
    """
    Plancherel density ``|Gamma(alpha - 1/2 + i s) Gamma(1/2 + i s) / (Gamma(alpha) Gamma(i s))|^2``.

    Computed independently of ``plancherel_weight``; returns 0 at ``s = 0``.
    """
    a = Alpha.coerce(alpha)
    scalar = np.ndim(s) == 0
    s = np.atleast_1d(np.asarray(s, dtype=float))
    value = np.zeros(s.shape)
    nonzero = s != 0
    t = s[nonzero]
    log_value = (log_gamma(a - 0.5 + 1j * t) + log_gamma(0.5 + 1j * t)
                 - log_gamma(a) - log_gamma(1j * t))
    value[nonzero] = np.exp(2 * np.real(log_value))
    return float(value[0]) if scalar else value


@dataclass(frozen=True)
class PlancherelWeight:
    """
    Plancherel density for a fixed weight, non-negative and vanishing at ``s = 0``.

    Examples
    --------
    >>> rho = PlancherelWeight(2.0)
    >>> rho(0.0)
    0.0
    """
    alpha: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Alpha.coerce(self.alpha))

    def __call__(self, s: Any) -> Any:
        return plancherel_weight(s, self.alpha)

    def product_form(self, s: Any) -> Any:
        return plancherel_weight_product_form(s, self.alpha)


def parseval_constant(alpha: "Alpha | float") -> float:
    """
    Closed-form ratio ``pi**5 / (alpha - 1)**4`` between spectral and holomorphic norms.

    It combines the square of the transform scale ``(pi / (alpha - 1))**2``, the angular
    integral ``2 pi`` and the total mass ``1/2`` of the density.
    """
    return math.pi**5 / (Alpha.coerce(alpha) - 1) ** 4


# --- Spectral Integrals ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ParsevalResult:
    """
    Outcome of a Parseval check.

    Attributes
    ----------
    ratio : complex
        Spectral inner product divided by the holomorphic one (0 if the latter vanishes).
    residual : float
        Quadrature refinement estimate of the spectral integral.
    s_max : float
        Truncation point of the spectral integral.
    value : complex
        Spectral inner product.
    norm2 : complex
        Holomorphic inner product.
    """
    ratio: complex
    residual: float
    s_max: float
    value: complex
    norm2: complex


def _check_alpha(F: SpectralFunction, G: SpectralFunction) -> float:
    if F.alpha != G.alpha:
        raise AlphaMismatchError(F.alpha, G.alpha)
    return F.alpha


def _angular_product(F: SpectralFunction, G: SpectralFunction, s: Any) -> Any:
    """``int_0^{2 pi} F conj(G) dphi`` by orthogonality of the Fourier modes."""
    modes_f = F.mode_functions(s)
    modes_g = G.mode_functions(s)
    total = np.zeros(np.shape(s), dtype=complex)
    for m in modes_f.keys() & modes_g.keys():
        total = total + modes_f[m] * np.conj(modes_g[m])
    return 2 * np.pi * total


def spectral_integrand(F: SpectralFunction, G: SpectralFunction, s: Any) -> Any:
    """Angular integral of ``F conj(G)`` times the density, at real ``s``."""
    alpha = _check_alpha(F, G)
    return _angular_product(F, G, s) * plancherel_weight(s, alpha)


def spectral_inner(F: SpectralFunction, G: SpectralFunction, s_max: float,
                   tol: float = 1e-12, max_refinements: int = 8) -> tuple[complex, float]:
    """
    Weighted inner product ``int_0^{s_max} int_0^{2 pi} F conj(G) rho dphi ds``.

    The angular integral is exact (mode orthogonality); the spectral integral uses composite
    Gauss-Legendre panels of width at most one, doubled until stable.

    Returns
    -------
    value : complex
        Truncated inner product.
    residual : float
        Difference between the last two refinements.
    """
    _check_alpha(F, G)
    base_panels = max(1, math.ceil(s_max / PANEL_WIDTH))

    def evaluate(level: int) -> complex:
        rule = composite_legendre(QUADRATURE_ORDER, 0.0, s_max, base_panels * 2**level)
        return complex(rule.integrate(lambda s: spectral_integrand(F, G, s)))

    value, residual, _ = integrate_until_stable(evaluate, start=0, tol=tol,
                                                max_refinements=max_refinements,
                                                quantity="spectral inner product")
    return value, residual


def _growth_exponent(F: SpectralFunction, G: SpectralFunction) -> float:
    """Power of ``s`` in the polynomial growth of the integrand (the density adds ``2 alpha - 1``)."""
    return F.polynomial_degree + G.polynomial_degree + 2 * F.alpha - 1


def tail_bound(F: SpectralFunction, G: SpectralFunction, s_max: float) -> float:
    """
    Bound ``|integrand(s_max)| / (pi - p / s_max)`` on the neglected tail, where ``p`` is the
    growth exponent of the integrand; infinite when ``s_max <= p / pi``.
    """
    p = _growth_exponent(F, G)
    if s_max <= p / np.pi:
        return math.inf
    return float(abs(spectral_integrand(F, G, s_max))) / (np.pi - p / s_max)


def choose_s_max(F: SpectralFunction, G: Optional[SpectralFunction] = None, tol: float = 1e-12,
                 step: float = 1.0) -> float:
    """
    Smallest multiple of ``step`` whose tail bound is below ``tol`` times the truncated integral.

    Raises
    ------
    TailBoundError
        If no truncation point below the search limit satisfies the bound.
    """
    G = F if G is None else G
    s_max = step
    tail = math.inf
    while s_max <= S_MAX_LIMIT:
        tail = tail_bound(F, G, s_max)
        if math.isfinite(tail):
            rule = composite_legendre(QUADRATURE_ORDER, 0.0, s_max, max(1, math.ceil(s_max)))
            estimate = abs(rule.integrate(lambda s: spectral_integrand(F, G, s)))
            if tail <= tol * estimate or estimate == 0:
                logger.debug("Chose s_max=%g (tail %.2e, estimate %.3e)", s_max, tail, estimate)
                return s_max
        s_max += step
    raise TailBoundError(S_MAX_LIMIT, tail, tol)


def _resolve_s_max(F: SpectralFunction, G: SpectralFunction, s_max: float | str,
                   tol: float) -> float:
    if s_max == "auto":
        return choose_s_max(F, G, tol)
    s_max = float(s_max)
    tail = tail_bound(F, G, s_max)
    estimate = abs(spectral_inner(F, G, s_max, tol)[0])
    if tail > tol * estimate and estimate != 0:
        raise TailBoundError(s_max, tail, tol * estimate)
    return s_max


def cross_parseval(f: CoefMatrix, g: CoefMatrix, s_max: float | str = "auto",
                   tol: float = 1e-12) -> ParsevalResult:
    """
    Polarised Parseval check ``<J f, J g>_rho / <f, g>``.

    Raises
    ------
    TailBoundError
        If an explicit ``s_max`` leaves a tail above ``tol`` relative to the integral.
    """
    F, G = transform(f), transform(g)
    cutoff = _resolve_s_max(F, G, s_max, tol)
    value, residual = spectral_inner(F, G, cutoff, tol)
    norm2 = inner_product(f, g)
    ratio = value / norm2 if norm2 != 0 else 0j
    logger.debug("Parseval ratio %s at s_max=%g", ratio, cutoff)
    return ParsevalResult(ratio, residual, cutoff, value, norm2)


def parseval_check(f: CoefMatrix, s_max: float | str = "auto", tol: float = 1e-12) -> ParsevalResult:
    """
    Ratio ``P / <f, f>`` with ``P = int int |J f|^2 rho dphi ds``.

    The zero vector gives ``P = 0`` and a ratio of 0.

    Examples
    --------
    >>> result = parseval_check(CoefMatrix.monomial(2.0, 0, 0))
    >>> abs(result.ratio / parseval_constant(2.0) - 1) < 1e-9
    True
    """
    result = cross_parseval(f, f, s_max, tol)
    return ParsevalResult(result.ratio.real, result.residual, result.s_max, result.value.real,
                          result.norm2.real)


# --- Diagnostics ----------------------------------------------------------------------------------

@dataclass(frozen=True)
class SymmetryReport:
    """
    Observed mismatch between ``|F(phi, s)|`` and ``|F(phi, -s)|`` on a grid.

    Attributes
    ----------
    max_abs_mismatch : float
        Largest absolute difference of the moduli.
    max_rel_mismatch : float
        Largest difference relative to ``max(|F(phi, s)|, |F(phi, -s)|, 1)``.
    """
    max_abs_mismatch: float
    max_rel_mismatch: float


def symmetry_report(F: SpectralFunction, s_values: Iterable[float], n_phi: int = 16) -> SymmetryReport:
    """Compare ``|F(phi, s)|`` and ``|F(phi, -s)|`` on a grid of angles and spectral values."""
    s = np.asarray(list(s_values), dtype=float)
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    pp, ss = np.meshgrid(phi, s, indexing="ij")
    plus = np.abs(F.evaluate(pp, ss))
    minus = np.abs(F.evaluate(pp, -ss))
    diff = np.abs(plus - minus)
    scale = np.maximum(np.maximum(plus, minus), 1.0)
    return SymmetryReport(float(diff.max(initial=0.0)), float((diff / scale).max(initial=0.0)))


def morera_residual(k: int, l: int, alpha: "Alpha | float", center: complex = 0.0,
                    half_width: float = 1.0, order: int = 32) -> float:
    """
    Contour integral of ``A_kl`` around the square of given center and half-width, relative to
    the perimeter times the largest sampled modulus; vanishes for holomorphic functions.
    """
    rule = gauss_legendre(order, -half_width, half_width)
    corners = [center + half_width * c for c in (-1 - 1j, 1 - 1j, 1 + 1j, -1 + 1j)]
    total = 0j
    largest = 0.0
    for start, end in zip(corners, corners[1:] + corners[:1]):
        direction = (end - start) / (2 * half_width)
        midpoint = (start + end) / 2
        points = midpoint + direction * rule.nodes
        values = kernel_coeff_table(k, l, points, alpha)[k, l]
        total += direction * np.dot(rule.weights, values)
        largest = max(largest, float(np.abs(values).max()))
    return float(abs(total) / (8 * half_width * max(largest, 1.0)))
