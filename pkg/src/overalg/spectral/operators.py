"""
overalg.spectral.operators
==========================

Difference-differential operators acting on spectral functions, matched with the algebra
generators of the holomorphic side through the transform.

A spectral operator is a finite sum of terms ``c(s, m) e^{i mu phi} F_m(s + sigma)``: each term
multiplies the Fourier mode ``m`` of its argument by a rational coefficient, shifts the mode by
``mu`` and the spectral parameter by ``sigma`` (``0`` or ``+-i``). Multiplication by ``m`` realises
``d/(i dphi)`` and multiplication by ``-m**2`` realises ``d^2/dphi^2``.

With ``x = i s`` and ``beta = 1/2 + i s``:

- ``D0 = d/(i dphi)``, ``D1 = e^{i phi} (d/(i dphi) + beta)``,
  ``Dm1 = e^{-i phi} (-d/(i dphi) + beta)``;
- ``Q0 F = -(x - 1/2)(x - alpha + 1/2)/(2x) F(s + i) + (x + 1/2)(x + alpha - 1/2)/(2x) F(s - i)
  - (x - alpha + 1/2)/(2x (x - 1/2)) d^2/dphi^2 F(s + i)``;
- ``Q1 F = e^{i phi} [beta (x - alpha + 1/2)/(2x) F(s + i) + beta (x + alpha - 1/2)/(2x) F(s - i)
  - (x - alpha + 1/2)/(2x (x - 1/2)) d^2/dphi^2 F(s + i)
  + (x - alpha + 1/2)/(x - 1/2) d/(i dphi) F(s + i)]``;
- ``Qm1`` is the mirror image of ``Q1`` under ``phi -> -phi``.

Classes
-------
SpectralOp
    Tags of the spectral operators.
SamplePoint
    Evaluation point ``(phi, s)`` away from the coefficient poles.
SpectralTerm
    Single term of an operator expression.
SpectralExpression
    Closed-form image of a spectral function under a word in the operators.

Functions
---------
apply_spectral
    Apply an operator to a spectral function or expression.
verify_intertwine
    Residual of an intertwining relation at sample points.
kernel_identity_residual
    Residual of the kernel identity ``Q0 K = (zbar d/dzbar + u d/du + alpha) K``.
q0_mode_zero
    Restriction of ``Q0`` to angle-independent functions.
commutator_expression
    Commutator of two spectral operators applied to a function.
sample_points
    Seeded random sample points.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from overalg.core.errors.numerics import PoleError, UnmatchedPairError
from overalg.model.holomorphic import AlgebraOp, Alpha, CoefMatrix, apply_algebra
from overalg.spectral.kernel import kernel_eval, spectral_exponents
from overalg.spectral.transform import SpectralFunction, transform

logger = logging.getLogger(__name__)

POLE_TOL = 1e-14
DEFAULT_MARGIN = 0.05
PRIMARY_POLES = (0j, 0.5j, -0.5j)


class SpectralOp(str, Enum):
    """Tags of the spectral operators."""
    D0 = "D0"
    D1 = "D1"
    Dm1 = "Dm1"
    Q0 = "Q0"
    Q1 = "Q1"
    Qm1 = "Qm1"


PAIRS: Dict[AlgebraOp, SpectralOp] = {
    AlgebraOp.L0: SpectralOp.D0,
    AlgebraOp.L1: SpectralOp.D1,
    AlgebraOp.Lm1: SpectralOp.Dm1,
    AlgebraOp.M0: SpectralOp.Q0,
    AlgebraOp.M1: SpectralOp.Q1,
    AlgebraOp.Mm1: SpectralOp.Qm1,
}
"""Algebra generator intertwined with each spectral operator by the transform."""


# --- Sample Points --------------------------------------------------------------------------------

@dataclass(frozen=True)
class SamplePoint:
    """
    Evaluation point ``(phi, s)`` with ``phi`` in ``[0, 2 pi)``.

    Use ``SamplePoint.checked`` to enforce a distance to the coefficient poles.
    """
    phi: float
    s: complex

    @classmethod
    def checked(cls, phi: float, s: complex, margin: float = DEFAULT_MARGIN) -> "SamplePoint":
        """
        Build a point, reducing ``phi`` modulo ``2 pi``.

        Raises
        ------
        PoleError
            If ``s`` lies within ``margin`` of ``0`` or ``+-i/2``.
        """
        s = complex(s)
        for pole in PRIMARY_POLES:
            if abs(s - pole) < margin:
                raise PoleError(s, pole=pole, margin=margin)
        return cls(float(phi) % (2 * np.pi), s)


def sample_points(rng: np.random.Generator, n: int, s_range: Tuple[float, float] = (0.0, 4.0),
                  imag_range: Tuple[float, float] = (-0.4, 0.4),
                  margin: float = DEFAULT_MARGIN) -> List[SamplePoint]:
    """
    Draw ``n`` points with uniform ``phi``, ``Re s`` in ``s_range`` and ``Im s`` in ``imag_range``,
    rejecting those too close to a pole.
    """
    points: List[SamplePoint] = []
    while len(points) < n:
        phi = rng.uniform(0, 2 * np.pi)
        s = complex(rng.uniform(*s_range), rng.uniform(*imag_range))
        try:
            points.append(SamplePoint.checked(phi, s, margin))
        except PoleError:
            continue
    return points


# --- Operator Terms -------------------------------------------------------------------------------

Coefficient = Callable[[np.ndarray, np.ndarray], np.ndarray]
"""Rational coefficient ``c(s, m)`` of a term, vectorised over ``s`` and the mode ``m``."""


@dataclass(frozen=True)
class SpectralTerm:
    """
    Term ``c(s, m) e^{i (m + mode_shift) phi} F_m(s + s_shift)`` of an operator expression.

    Attributes
    ----------
    coefficient : Coefficient
        Coefficient as a function of ``s`` and of the mode ``m`` of the argument.
    s_shift : complex
        Shift of the spectral parameter.
    mode_shift : int
        Shift of the Fourier mode.
    poles : FrozenSet[complex]
        Values of ``s`` where the coefficient is singular.
    """
    coefficient: Coefficient
    s_shift: complex = 0j
    mode_shift: int = 0
    poles: FrozenSet[complex] = frozenset()

    def then(self, outer: "SpectralTerm") -> "SpectralTerm":
        """Term obtained by applying ``outer`` to the output of ``self``."""
        inner = self

        def coefficient(s: np.ndarray, m: np.ndarray) -> np.ndarray:
            return outer.coefficient(s, m + inner.mode_shift) * inner.coefficient(s + outer.s_shift, m)

        poles = outer.poles | {p - outer.s_shift for p in inner.poles}
        return SpectralTerm(coefficient, inner.s_shift + outer.s_shift,
                            inner.mode_shift + outer.mode_shift, frozenset(poles))

    def scaled(self, factor: complex) -> "SpectralTerm":
        base = self.coefficient
        return SpectralTerm(lambda s, m: factor * base(s, m), self.s_shift, self.mode_shift,
                            self.poles)


def _x(s: np.ndarray) -> np.ndarray:
    return 1j * s


def _beta(s: np.ndarray) -> np.ndarray:
    return 0.5 + 1j * s


def _operator_terms(op: SpectralOp, alpha: float) -> Tuple[SpectralTerm, ...]:
    """Terms of a spectral operator for a given weight."""
    q_poles = frozenset({0j, -0.5j})  # x = 0 and x = 1/2
    if op is SpectralOp.D0:
        return (SpectralTerm(lambda s, m: m + 0 * s),)
    if op is SpectralOp.D1:
        return (SpectralTerm(lambda s, m: m + _beta(s), mode_shift=1),)
    if op is SpectralOp.Dm1:
        return (SpectralTerm(lambda s, m: -m + _beta(s), mode_shift=-1),)

    def up(s, m):
        x = _x(s)
        return (x - alpha + 0.5) / (x - 0.5)

    if op is SpectralOp.Q0:
        return (
            SpectralTerm(lambda s, m: -(_x(s) - 0.5) * (_x(s) - alpha + 0.5) / (2 * _x(s))
                         + up(s, m) * m**2 / (2 * _x(s)), 1j, 0, q_poles),
            SpectralTerm(lambda s, m: (_x(s) + 0.5) * (_x(s) + alpha - 0.5) / (2 * _x(s)) + 0 * m,
                         -1j, 0, frozenset({0j})),
        )
    sign = 1 if op is SpectralOp.Q1 else -1
    return (
        SpectralTerm(lambda s, m: _beta(s) * (_x(s) - alpha + 0.5) / (2 * _x(s))
                     + up(s, m) * (m**2 / (2 * _x(s)) + sign * m), 1j, sign, q_poles),
        SpectralTerm(lambda s, m: _beta(s) * (_x(s) + alpha - 0.5) / (2 * _x(s)) + 0 * m,
                     -1j, sign, frozenset({0j})),
    )


# --- Expressions ----------------------------------------------------------------------------------

@dataclass(frozen=True)
class SpectralExpression:
    """
    Image of a spectral function under a word in the spectral operators, kept in closed form.

    Attributes
    ----------
    base : SpectralFunction
        Function the word is applied to.
    terms : Tuple[SpectralTerm, ...]
        Terms of the expanded word.
    """
    base: SpectralFunction
    terms: Tuple[SpectralTerm, ...]

    @classmethod
    def identity(cls, base: SpectralFunction) -> "SpectralExpression":
        return cls(base, (SpectralTerm(lambda s, m: np.ones_like(s) + 0 * m),))

    @property
    def alpha(self) -> float:
        return self.base.alpha

    @property
    def shifts(self) -> FrozenSet[complex]:
        """Spectral shifts occurring in the expression."""
        return frozenset(t.s_shift for t in self.terms)

    @property
    def mode_shifts(self) -> FrozenSet[int]:
        """Mode shifts occurring in the expression."""
        return frozenset(t.mode_shift for t in self.terms)

    @property
    def poles(self) -> FrozenSet[complex]:
        return frozenset().union(*(t.poles for t in self.terms))

    def apply(self, op: SpectralOp | str) -> "SpectralExpression":
        """Apply a further operator to the expression."""
        outer = _operator_terms(SpectralOp(op), self.alpha)
        return SpectralExpression(self.base, tuple(t.then(o) for t in self.terms for o in outer))

    def evaluate(self, phi: Any, s: Any) -> Any:
        """
        Value at ``(phi, s)``, broadcasting arrays.

        Raises
        ------
        PoleError
            If a coefficient is evaluated within ``1e-14`` of one of its poles.
        """
        phi, s = np.broadcast_arrays(np.asarray(phi, dtype=float), np.asarray(s, dtype=complex))
        for pole in self.poles:
            close = np.abs(s - pole) < POLE_TOL
            if np.any(close):
                raise PoleError(s[close].ravel()[0], pole=pole)
        cache: Dict[complex, Dict[int, Any]] = {}
        total = np.zeros(s.shape, dtype=complex)
        for term in self.terms:
            if term.s_shift not in cache:
                cache[term.s_shift] = self.base.mode_functions(s + term.s_shift)
            for m, g in cache[term.s_shift].items():
                coef = term.coefficient(s, np.asarray(m))
                total += coef * np.exp(1j * (m + term.mode_shift) * phi) * g
        return total.item() if total.ndim == 0 else total

    def __call__(self, phi: Any, s: Any) -> Any:
        return self.evaluate(phi, s)

    def _combine(self, other: "SpectralExpression", sign: int) -> "SpectralExpression":
        if other.base is not self.base:
            raise ValueError("Expressions must share the same base function")
        others = tuple(t.scaled(sign) for t in other.terms)
        return SpectralExpression(self.base, self.terms + others)

    def __add__(self, other: "SpectralExpression") -> "SpectralExpression":
        return self._combine(other, 1)

    def __sub__(self, other: "SpectralExpression") -> "SpectralExpression":
        return self._combine(other, -1)

    def __mul__(self, factor: complex) -> "SpectralExpression":
        return SpectralExpression(self.base, tuple(t.scaled(factor) for t in self.terms))

    __rmul__ = __mul__


def _as_expression(F: "SpectralFunction | SpectralExpression") -> SpectralExpression:
    return F if isinstance(F, SpectralExpression) else SpectralExpression.identity(F)


def apply_spectral(op: SpectralOp | str, F: "SpectralFunction | SpectralExpression") -> SpectralExpression:
    """
    Apply a spectral operator.

    Examples
    --------
    >>> F = transform(CoefMatrix.monomial(2.0, 0, 0))
    >>> G = apply_spectral("Q0", F)
    >>> abs(G.evaluate(0.3, 1.1) - 2.0 * F.evaluate(0.3, 1.1)) < 1e-10
    True
    """
    return _as_expression(F).apply(op)


def commutator_expression(a: SpectralOp | str, b: SpectralOp | str,
                          F: "SpectralFunction | SpectralExpression") -> SpectralExpression:
    """``[a, b] F = a(b F) - b(a F)`` as a single expression."""
    expr = _as_expression(F)
    return expr.apply(b).apply(a) - expr.apply(a).apply(b)


# --- Intertwining Checks --------------------------------------------------------------------------

def relative_residual(lhs: Any, rhs: Any) -> Any:
    """``|lhs - rhs| / max(|lhs|, |rhs|, 1)``, elementwise."""
    lhs, rhs = np.asarray(lhs), np.asarray(rhs)
    return np.abs(lhs - rhs) / np.maximum(np.maximum(np.abs(lhs), np.abs(rhs)), 1.0)


def _split_points(points: Iterable[SamplePoint]) -> Tuple[np.ndarray, np.ndarray]:
    pts = list(points)
    return (np.array([p.phi for p in pts], dtype=float),
            np.array([p.s for p in pts], dtype=complex))


def verify_intertwine(f: CoefMatrix, algebra_op: AlgebraOp | str, spectral_op: SpectralOp | str,
                      points: Sequence[SamplePoint]) -> float:
    """
    Largest relative residual of ``J(X f) = S (J f)`` over the sample points.

    Raises
    ------
    UnmatchedPairError
        If ``spectral_op`` is not the partner of ``algebra_op``.
    """
    algebra_op, spectral_op = AlgebraOp(algebra_op), SpectralOp(spectral_op)
    if PAIRS.get(algebra_op) is not spectral_op:
        raise UnmatchedPairError(algebra_op.value, spectral_op.value)
    phi, s = _split_points(points)
    lhs = transform(apply_algebra(algebra_op, f)).evaluate(phi, s)
    rhs = apply_spectral(spectral_op, transform(f)).evaluate(phi, s)
    return float(np.max(relative_residual(lhs, rhs), initial=0.0))


def q0_mode_zero(g: Callable[[Any], Any], s: Any, alpha: "Alpha | float") -> Any:
    """
    ``Q0`` restricted to angle-independent functions:
    ``-(x - 1/2)(x - alpha + 1/2)/(2x) g(s + i) + (x + 1/2)(x + alpha - 1/2)/(2x) g(s - i)``.
    """
    a = Alpha.coerce(alpha)
    s = np.asarray(s, dtype=complex)
    if np.any(np.abs(s) < POLE_TOL):
        raise PoleError(s, pole=0j)
    x = _x(s)
    return (-(x - 0.5) * (x - a + 0.5) / (2 * x) * g(s + 1j)
            + (x + 0.5) * (x + a - 0.5) / (2 * x) * g(s - 1j))


def kernel_identity_residual(point: SamplePoint, alpha: "Alpha | float", z: complex = 0.3 + 0.2j,
                             u: complex = -0.1 + 0.4j, floor: float = 1.0) -> float:
    """
    Residual ``|(zbar d/dzbar + u d/du + alpha) K - Q0 K| / (|K| + floor)`` at one point.

    All derivatives are analytic: with ``p = zbar e^{i phi} / (1 - zbar e^{i phi})``,
    ``q = u e^{-i phi} / (1 - u e^{-i phi})`` and ``r = zbar u / (1 - zbar u)``,

    - ``(zbar d/dzbar + u d/du) log K = beta (p + q) + 2 gamma r``;
    - ``d^2/dphi^2 K = K [-beta^2 (p - q)^2 - beta (p (1 + p) + q (1 + q))]``.
    """
    a = Alpha.coerce(alpha)
    phi, s = point.phi, point.s
    rot = np.exp(1j * phi)
    zbar = np.conj(z)
    p = zbar * rot / (1 - zbar * rot)
    q = u / rot / (1 - u / rot)
    r = zbar * u / (1 - zbar * u)

    beta, gamma = spectral_exponents(s, a)
    k0 = kernel_eval(phi, s, z, u, a)
    lhs = k0 * (beta * (p + q) + 2 * gamma * r + a)

    x = 1j * s
    k_up = kernel_eval(phi, s + 1j, z, u, a)
    k_down = kernel_eval(phi, s - 1j, z, u, a)
    beta_up = beta - 1
    d2_up = k_up * (-beta_up**2 * (p - q) ** 2 - beta_up * (p * (1 + p) + q * (1 + q)))
    rhs = (-(x - 0.5) * (x - a + 0.5) / (2 * x) * k_up
           + (x + 0.5) * (x + a - 0.5) / (2 * x) * k_down
           - (x - a + 0.5) / (2 * x * (x - 0.5)) * d2_up)
    return float(abs(lhs - rhs) / (abs(k0) + floor))
