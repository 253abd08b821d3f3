"""
overalg.spectral.hahn
=====================

Continuous dual Hahn polynomials and their identification with the angle-independent
eigenfunctions of ``Q0``.

The transforms ``g_k = J((z ubar)**k)`` are angle-independent, even polynomials in ``s`` and
satisfy ``Q0 g_k = (2k + alpha) g_k``. On angle-independent functions ``Q0`` is twice the
continuous dual Hahn difference operator with parameters ``(1/2, alpha - 1/2, 1/2)``, so the
``g_k`` are proportional to those polynomials. This module measures that identification.

Classes
-------
CdhParams
    Parameter triple ``(a, b, c)``.
CandidateMatch
    Eigen-equation test of one candidate triple.
MatchReport
    Outcome of the search over candidate triples.

Functions
---------
cdh_eval
    Terminating hypergeometric sum.
cdh_recurrence
    Three-term recurrence in the degree.
cdh_difference_residual
    Residual of the difference equation in ``s``.
q0_eigen_residual
    Residual of ``Q0 g_k = (2k + alpha) g_k``.
cdh_match_report
    Test all candidate triples against the eigen-equation.
fitted_degree
    Smallest degree in ``s**2`` fitting sampled values.
mode_zero_orthogonality
    Normalised weighted inner product of ``g_k`` and ``g_l``.
"""
import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np

from overalg.core.errors.numerics import DegenerateDenominatorError, NumericsError
from overalg.core.errors.validation import RangeValidationError
from overalg.model.holomorphic import Alpha, CoefMatrix
from overalg.spectral.kernel import kernel_coeff_table
from overalg.spectral.operators import q0_mode_zero
from overalg.spectral.plancherel import choose_s_max, spectral_inner
from overalg.spectral.transform import transform

logger = logging.getLogger(__name__)

MAX_DEGREE = 12
GRID = np.linspace(0.2, 6.0, 200)


@dataclass(frozen=True)
class CdhParams:
    """Parameters ``(a, b, c)`` of a continuous dual Hahn family."""
    a: float
    b: float
    c: float

    @property
    def positive(self) -> bool:
        """Whether all parameters are positive (orthogonality on the half-line)."""
        return self.a > 0 and self.b > 0 and self.c > 0

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.a, self.b, self.c)


def _check_degree(n: int) -> None:
    if not 0 <= n <= MAX_DEGREE:
        raise RangeValidationError(n, ge=0, le=MAX_DEGREE, name="degree")


def cdh_eval(n: int, params: CdhParams, s: Any) -> Any:
    """
    ``3F2(-n, a + i s, a - i s; a + b, a + c; 1)`` as a terminating sum.

    Raises
    ------
    DegenerateDenominatorError
        If ``(a + b)_j`` or ``(a + c)_j`` vanishes for some ``j <= n``.

    Examples
    --------
    >>> cdh_eval(0, CdhParams(0.5, 1.5, 0.5), 2.0)
    (1+0j)
    """
    _check_degree(n)
    a, b, c = params.as_tuple()
    for j in range(n):
        if abs(a + b + j) < 1e-12 or abs(a + c + j) < 1e-12:
            raise DegenerateDenominatorError(params.as_tuple(), n)
    s = np.asarray(s, dtype=complex)
    term = np.ones_like(s)
    total = np.ones_like(s)
    for j in range(1, n + 1):
        term = term * (-n + j - 1) * (a + 1j * s + j - 1) * (a - 1j * s + j - 1) / (
            (a + b + j - 1) * (a + c + j - 1) * j)
        total = total + term
    return total.item() if total.ndim == 0 else total


def cdh_recurrence(n: int, params: CdhParams, s: Any) -> Any:
    """
    Same values as ``cdh_eval`` through the three-term recurrence
    ``-(a**2 + s**2) p_n = A_n p_{n+1} - (A_n + C_n) p_n + C_n p_{n-1}`` with
    ``A_n = (n + a + b)(n + a + c)`` and ``C_n = n (n + b + c - 1)``.
    """
    _check_degree(n)
    a, b, c = params.as_tuple()
    s = np.asarray(s, dtype=complex)
    prev, curr = np.zeros_like(s), np.ones_like(s)
    for j in range(n):
        A = (j + a + b) * (j + a + c)
        C = j * (j + b + c - 1)
        if abs(A) < 1e-12:
            raise DegenerateDenominatorError(params.as_tuple(), n)
        prev, curr = curr, ((A + C - (a**2 + s**2)) * curr - C * prev) / A
    return curr.item() if curr.ndim == 0 else curr


def _difference_coefficients(params: CdhParams, s: Any) -> Tuple[Any, Any]:
    """``B(s)`` and ``D(s)`` of the continuous dual Hahn difference equation."""
    a, b, c = params.as_tuple()
    x = 1j * np.asarray(s, dtype=complex)
    B = (a - x) * (b - x) * (c - x) / (2 * x * (2 * x - 1))
    D = (a + x) * (b + x) * (c + x) / (2 * x * (2 * x + 1))
    return B, D


def cdh_difference_residual(n: int, params: CdhParams, s: Any) -> float:
    """
    Largest relative residual of ``n p(s) = B p(s + i) - (B + D) p(s) + D p(s - i)``.
    """
    s = np.asarray(s, dtype=complex)
    B, D = _difference_coefficients(params, s)
    p = cdh_eval(n, params, s)
    rhs = B * cdh_eval(n, params, s + 1j) - (B + D) * p + D * cdh_eval(n, params, s - 1j)
    scale = np.maximum(np.abs(rhs), np.maximum(np.abs(n * p), 1.0))
    return float(np.max(np.abs(n * p - rhs) / scale))


def mode_zero_profile(k: int, alpha: "Alpha | float") -> Any:
    """``s -> A_kk(s)``, proportional to ``g_k = J((z ubar)**k)``."""
    return lambda s: kernel_coeff_table(k, k, s, alpha)[k, k]


def q0_eigen_residual(k: int, alpha: "Alpha | float", points: Optional[Iterable[float]] = None) -> float:
    """
    Largest residual of ``Q0 g_k - (2k + alpha) g_k`` relative to ``max(|Q0 g_k|, 1)``.

    ``points`` are spectral values (default: 200 points in ``[0.2, 6]``).
    """
    a = Alpha.coerce(alpha)
    s = GRID if points is None else np.asarray(list(points), dtype=complex)
    g = mode_zero_profile(k, a)
    lhs = q0_mode_zero(g, s, a)
    rhs = (2 * k + a) * g(s)
    return float(np.max(np.abs(lhs - rhs) / np.maximum(np.abs(lhs), 1.0)))


# --- Candidate Search -----------------------------------------------------------------------------

def _finite_or_none(value: float) -> Optional[float]:
    return value if math.isfinite(value) else None


@dataclass(frozen=True)
class CandidateMatch:
    """
    Eigen-equation test of one candidate triple.

    Attributes
    ----------
    params : CdhParams
        Candidate parameters.
    max_residual : float
        Largest relative residual of ``Q0 p_n = lambda_n p_n`` over degrees and grid, with the
        eigenvalue fitted by least squares (infinite for degenerate triples).
    eigenvalues : List[float]
        Fitted eigenvalues ``lambda_n``.
    slope, intercept : float
        Affine fit ``lambda_n = slope * n + intercept``.
    """
    params: CdhParams
    max_residual: float
    eigenvalues: List[float] = field(default_factory=list)
    slope: float = math.nan
    intercept: float = math.nan

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": list(self.params.as_tuple()),
            "max_residual": _finite_or_none(self.max_residual),
            "eigenvalues": self.eigenvalues,
            "slope": _finite_or_none(self.slope),
            "intercept": _finite_or_none(self.intercept),
        }


@dataclass(frozen=True)
class MatchReport:
    """
    Outcome of the search for the continuous dual Hahn parameters of ``Q0``.

    Attributes
    ----------
    alpha : float
        Weight.
    n_max : int
        Highest degree tested.
    candidates : List[CandidateMatch]
        All candidates, in enumeration order.
    best : CandidateMatch
        Candidate with the smallest residual.
    """
    alpha: float
    n_max: int
    candidates: List[CandidateMatch]
    best: CandidateMatch

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alpha": self.alpha,
            "n_max": self.n_max,
            "best": self.best.to_dict(),
            "candidates": [c.to_dict() for c in self.candidates],
        }


def candidate_params(alpha: "Alpha | float") -> List[CdhParams]:
    """Triples from ``{+-1/2, +-(alpha - 1/2)}`` with ``b <= c``."""
    a = Alpha.coerce(alpha)
    values = sorted({0.5, -0.5, a - 0.5, -(a - 0.5)})
    return [CdhParams(x, y, z) for x in values
            for y, z in itertools.combinations_with_replacement(values, 2)]


def _test_candidate(params: CdhParams, alpha: float, n_max: int) -> CandidateMatch:
    try:
        residuals, eigenvalues = [], []
        for n in range(n_max + 1):
            p = cdh_eval(n, params, GRID)
            qp = q0_mode_zero(lambda t: cdh_eval(n, params, t), GRID, alpha)
            lam = np.vdot(p, qp) / np.vdot(p, p)
            eigenvalues.append(float(lam.real))
            residuals.append(float(np.max(np.abs(qp - lam * p)) / max(np.max(np.abs(qp)), 1.0)))
    except NumericsError:
        return CandidateMatch(params, math.inf)
    slope, intercept = (np.polynomial.polynomial.polyfit(np.arange(n_max + 1), eigenvalues, 1)[::-1]
                        if n_max > 0 else (math.nan, eigenvalues[0]))
    return CandidateMatch(params, max(residuals), eigenvalues, float(slope), float(intercept))


def cdh_match_report(alpha: "Alpha | float", n_max: int = 6) -> MatchReport:
    """
    Test every candidate triple against the eigen-equation of ``Q0`` for degrees ``0 .. n_max``.

    Examples
    --------
    >>> report = cdh_match_report(2.0, 4)
    >>> sorted(report.best.params.as_tuple())
    [0.5, 0.5, 1.5]
    """
    a = Alpha.coerce(alpha)
    _check_degree(n_max)
    candidates = [_test_candidate(p, a, n_max) for p in candidate_params(a)]
    best = min(candidates, key=lambda c: c.max_residual)
    logger.debug("Best continuous dual Hahn candidate %s (residual %.2e)", best.params,
                 best.max_residual)
    return MatchReport(a, n_max, candidates, best)


# --- Profiles -------------------------------------------------------------------------------------

def fitted_degree(values: Any, s: Any, max_degree: int = MAX_DEGREE, tol: float = 1e-10) -> int:
    """
    Smallest degree ``d`` such that a polynomial of degree ``d`` in ``s**2`` fits the samples
    within ``tol`` times their largest modulus.

    Raises
    ------
    RangeValidationError
        If no degree up to ``max_degree`` fits.
    """
    values = np.asarray(values, dtype=complex)
    t = np.asarray(s, dtype=float) ** 2
    scale = max(float(np.max(np.abs(values))), np.finfo(float).tiny)
    for d in range(max_degree + 1):
        fit = np.zeros_like(values)
        for part, unit in ((values.real, 1.0), (values.imag, 1j)):
            coef = np.polynomial.polynomial.polyfit(t, part, d)
            fit = fit + unit * np.polynomial.polynomial.polyval(t, coef)
        if np.max(np.abs(fit - values)) <= tol * scale:
            return d
    raise RangeValidationError(max_degree + 1, le=max_degree, name="fitted degree")


def mode_zero_orthogonality(k: int, l: int, alpha: "Alpha | float", tol: float = 1e-12) -> float:
    """
    ``|<g_k, g_l>| / sqrt(<g_k, g_k> <g_l, g_l>)`` for the Plancherel-weighted inner product.
    """
    a = Alpha.coerce(alpha)
    Fk = transform(CoefMatrix.monomial(a, k, k))
    Fl = transform(CoefMatrix.monomial(a, l, l))
    s_max = max(choose_s_max(Fk, Fk, tol), choose_s_max(Fl, Fl, tol))
    cross, _ = spectral_inner(Fk, Fl, s_max, tol)
    kk, _ = spectral_inner(Fk, Fk, s_max, tol)
    ll, _ = spectral_inner(Fl, Fl, s_max, tol)
    return float(abs(cross) / math.sqrt(kk.real * ll.real))
