"""
overalg.model.holomorphic
=========================

Finite Taylor-coefficient model of the tensor product of a holomorphic and an anti-holomorphic
weighted Bergman space of weight ``alpha > 1``.

A vector is a polynomial ``f(z, ubar) = sum_kl c[k, l] z**k ubar**l`` stored as a dense complex
matrix. Monomials are orthogonal with squared norms ``k! / (alpha)_k * l! / (alpha)_l``.

Classes
-------
Alpha
    Validated weight of the representation.
CoefMatrix
    Coefficient matrix of a polynomial vector.
GroupElement
    Element of SU(1, 1) written as ``[[a, b], [conj(b), conj(a)]]``.
GroupAction
    Truncated result of the group action, with a tail estimate.
AlgebraOp
    Generators of the two commuting copies of sl(2) and their diagonal combinations.
StructureFit
    Least-squares expansion of a commutator in a basis of operators.

Functions
---------
monomial_norms
    Squared norms ``k! / (alpha)_k`` of the one-variable monomials.
inner_product
    Hermitian inner product of two coefficient matrices.
apply_algebra
    Action of an algebra generator.
apply_group
    Diagonal group action, expanded and truncated.
commutator
    Commutator of two algebra generators applied to a vector.
structure_constants
    Expansion of a commutator in a basis of generators.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, Mapping, Sequence, Tuple

import numpy as np
from scipy.special import comb

from overalg.core.errors.numerics import AlphaMismatchError
from overalg.core.errors.validation import (
    RangeValidationError,
    TypeValidationError,
    ValidationError,
)
from overalg.core.types import ComplexArray, FloatArray

logger = logging.getLogger(__name__)

NORMALISATION_TOL = 1e-12


# --- Weight ---------------------------------------------------------------------------------------

@dataclass(frozen=True)
class Alpha:
    """
    Weight of the representation, a real number ``> 1``.

    Raises
    ------
    RangeValidationError
        If the value is not finite or not greater than 1.

    Examples
    --------
    >>> float(Alpha(2.5))
    2.5
    >>> Alpha(0.5)
    Traceback (most recent call last):
    ...
    RangeValidationError: alpha: value 0.5 out of bounds: required > 1.
    """
    value: float

    def __post_init__(self) -> None:
        if isinstance(self.value, bool) or not isinstance(self.value, (int, float, np.floating)):
            raise TypeValidationError(self.value, (int, float))
        if not (np.isfinite(self.value) and self.value > 1):
            raise RangeValidationError(self.value, gt=1, name="alpha")
        object.__setattr__(self, "value", float(self.value))

    def __float__(self) -> float:
        return self.value

    @classmethod
    def coerce(cls, alpha: "Alpha | float") -> float:
        """Validate a weight given as ``Alpha`` or number and return it as a float."""
        return alpha.value if isinstance(alpha, Alpha) else cls(alpha).value


def monomial_norms(alpha: "Alpha | float", n: int) -> FloatArray:
    """
    Squared norms ``w_k = k! / (alpha)_k`` for ``k = 0 .. n``.

    Examples
    --------
    >>> monomial_norms(2.0, 2)
    array([1.        , 0.5       , 0.33333333])
    """
    a = Alpha.coerce(alpha)
    k = np.arange(1, n + 1)
    return np.concatenate(([1.0], np.cumprod(k / (a + k - 1))))


# --- Coefficient Matrix ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CoefMatrix:
    """
    Coefficients ``c[k, l]`` of ``z**k ubar**l`` for a fixed weight.

    Attributes
    ----------
    alpha : float
        Weight, ``> 1``.
    coeffs : ComplexArray
        Read-only matrix of shape ``(K + 1, L + 1)``.

    Notes
    -----
    Arithmetic pads operands with zeros to a common shape. The zero vector is legal everywhere.
    """
    alpha: float
    coeffs: ComplexArray

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Alpha.coerce(self.alpha))
        arr = np.array(self.coeffs, dtype=complex)
        if arr.ndim != 2 or 0 in arr.shape:
            raise ValidationError(f"Coefficient matrix must be 2-dimensional and non-empty, "
                                  f"got shape {arr.shape}.")
        if not np.all(np.isfinite(arr)):
            raise ValidationError("Coefficient matrix has non-finite entries.")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    # --- Constructors ---

    @classmethod
    def monomial(cls, alpha: "Alpha | float", k: int, l: int, coef: complex = 1.0) -> "CoefMatrix":
        """Single monomial ``coef * z**k * ubar**l``."""
        arr = np.zeros((k + 1, l + 1), dtype=complex)
        arr[k, l] = coef
        return cls(Alpha.coerce(alpha), arr)

    @classmethod
    def zero(cls, alpha: "Alpha | float") -> "CoefMatrix":
        """Zero vector."""
        return cls(Alpha.coerce(alpha), np.zeros((1, 1), dtype=complex))

    @classmethod
    def random(cls, alpha: "Alpha | float", degree: int, rng: np.random.Generator) -> "CoefMatrix":
        """Polynomial with standard complex Gaussian coefficients up to ``degree`` in each variable."""
        shape = (degree + 1, degree + 1)
        arr = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        return cls(Alpha.coerce(alpha), arr)

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "CoefMatrix":
        """Inverse of ``to_json``."""
        pairs = np.asarray(data["coeffs"], dtype=float)
        if pairs.ndim != 3 or pairs.shape[-1] != 2:
            raise ValidationError("Expected coefficients as nested [re, im] pairs.")
        return cls(data["alpha"], pairs[..., 0] + 1j * pairs[..., 1])

    # --- Shape Helpers ---

    @property
    def degree(self) -> Tuple[int, int]:
        """Degree bounds ``(K, L)`` in ``z`` and ``ubar``."""
        rows, cols = self.coeffs.shape
        return rows - 1, cols - 1

    def padded(self, K: int, L: int) -> "CoefMatrix":
        """Zero-padded copy with degree bounds ``(K, L)``, not smaller than the current ones."""
        k0, l0 = self.degree
        if K < k0 or L < l0:
            raise RangeValidationError((K, L), ge=max(k0, l0), name="padded degree")
        arr = np.zeros((K + 1, L + 1), dtype=complex)
        arr[: k0 + 1, : l0 + 1] = self.coeffs
        return CoefMatrix(self.alpha, arr)

    def trimmed(self) -> "CoefMatrix":
        """Copy without trailing zero rows and columns (at least ``1 x 1``)."""
        nonzero = np.argwhere(self.coeffs != 0)
        if nonzero.size == 0:
            return CoefMatrix.zero(self.alpha)
        K, L = nonzero.max(axis=0)
        return CoefMatrix(self.alpha, self.coeffs[: K + 1, : L + 1])

    def norm(self) -> float:
        """Norm induced by ``inner_product``."""
        return float(np.sqrt(inner_product(self, self).real))

    def evaluate(self, z: Any, ubar: Any) -> Any:
        """Value of the polynomial at ``(z, ubar)``, broadcasting arrays."""
        z, ubar = np.broadcast_arrays(np.asarray(z, dtype=complex), np.asarray(ubar, dtype=complex))
        return np.polynomial.polynomial.polyval2d(z, ubar, self.coeffs)

    def allclose(self, other: "CoefMatrix", atol: float = 1e-12) -> bool:
        """Entrywise comparison after padding to a common shape."""
        a, b = _aligned(self, other)
        return bool(np.allclose(a, b, rtol=0.0, atol=atol))

    # --- Serialisation ---

    def to_json(self) -> Dict[str, Any]:
        """``{"alpha": alpha, "coeffs": [[[re, im], ...], ...]}``, row-major in ``k``."""
        pairs = np.stack([self.coeffs.real, self.coeffs.imag], axis=-1)
        return {"alpha": self.alpha, "coeffs": pairs.tolist()}

    # --- Arithmetic ---

    def __add__(self, other: "CoefMatrix") -> "CoefMatrix":
        a, b = _aligned(self, other)
        return CoefMatrix(self.alpha, a + b)

    def __sub__(self, other: "CoefMatrix") -> "CoefMatrix":
        a, b = _aligned(self, other)
        return CoefMatrix(self.alpha, a - b)

    def __mul__(self, scalar: complex) -> "CoefMatrix":
        return CoefMatrix(self.alpha, self.coeffs * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "CoefMatrix":
        return CoefMatrix(self.alpha, -self.coeffs)

    def __repr__(self) -> str:
        K, L = self.degree
        return f"CoefMatrix(alpha={self.alpha}, degree=({K}, {L}))"


def _aligned(f: CoefMatrix, g: CoefMatrix) -> Tuple[ComplexArray, ComplexArray]:
    """Coefficient arrays of ``f`` and ``g`` padded to a common shape."""
    if f.alpha != g.alpha:
        raise AlphaMismatchError(f.alpha, g.alpha)
    K = max(f.degree[0], g.degree[0])
    L = max(f.degree[1], g.degree[1])
    return f.padded(K, L).coeffs, g.padded(K, L).coeffs


def inner_product(f: CoefMatrix, g: CoefMatrix) -> complex:
    """
    Hermitian inner product ``sum_kl c[k, l] conj(c'[k, l]) w_k w_l``, linear in ``f``.

    Raises
    ------
    AlphaMismatchError
        If ``f`` and ``g`` carry different weights.

    Examples
    --------
    >>> zu = CoefMatrix.monomial(2.0, 1, 1)
    >>> inner_product(zu, zu)
    (0.25+0j)
    """
    a, b = _aligned(f, g)
    K, L = a.shape[0] - 1, a.shape[1] - 1
    wk = monomial_norms(f.alpha, K)
    wl = monomial_norms(f.alpha, L)
    return complex(np.sum(a * np.conj(b) * wk[:, None] * wl[None, :]))


# --- Lie Algebra Action ---------------------------------------------------------------------------

class AlgebraOp(str, Enum):
    """
    Generators acting on polynomial vectors.

    The ``z`` and ``u`` families are the two commuting copies of sl(2); ``L*`` are the
    infinitesimal generators of the diagonal action and ``M*`` the complementary combinations.
    """
    L0z = "L0z"
    L1z = "L1z"
    Lm1z = "Lm1z"
    L0u = "L0u"
    L1u = "L1u"
    Lm1u = "Lm1u"
    L0 = "L0"
    L1 = "L1"
    Lm1 = "Lm1"
    M0 = "M0"
    M1 = "M1"
    Mm1 = "Mm1"


_COMBINATIONS: Dict[AlgebraOp, Tuple[Tuple[AlgebraOp, int], ...]] = {
    AlgebraOp.L0: ((AlgebraOp.L0z, 1), (AlgebraOp.L0u, -1)),
    AlgebraOp.L1: ((AlgebraOp.L1z, 1), (AlgebraOp.L1u, -1)),
    AlgebraOp.Lm1: ((AlgebraOp.Lm1u, 1), (AlgebraOp.Lm1z, -1)),
    AlgebraOp.M0: ((AlgebraOp.L0z, 1), (AlgebraOp.L0u, 1)),
    AlgebraOp.M1: ((AlgebraOp.L1z, 1), (AlgebraOp.L1u, 1)),
    AlgebraOp.Mm1: ((AlgebraOp.Lm1z, 1), (AlgebraOp.Lm1u, 1)),
}


def _apply_primitive(op: AlgebraOp, c: ComplexArray, alpha: float) -> ComplexArray:
    """Action of a single-variable generator on a coefficient array, output grown by one."""
    K, L = c.shape[0] - 1, c.shape[1] - 1
    k = np.arange(K + 1)[:, None]
    l = np.arange(L + 1)[None, :]
    out = np.zeros((K + 2, L + 2), dtype=complex)
    if op is AlgebraOp.L0z:          # z d/dz + alpha/2
        out[: K + 1, : L + 1] = (k + alpha / 2) * c
    elif op is AlgebraOp.L1z:        # z^2 d/dz + alpha z
        out[1:, : L + 1] = (k + alpha) * c
    elif op is AlgebraOp.Lm1z:       # d/dz
        out[:K, : L + 1] = (k * c)[1:]
    elif op is AlgebraOp.L0u:        # ubar d/dubar + alpha/2
        out[: K + 1, : L + 1] = (l + alpha / 2) * c
    elif op is AlgebraOp.L1u:        # d/dubar
        out[: K + 1, :L] = (l * c)[:, 1:]
    elif op is AlgebraOp.Lm1u:       # ubar^2 d/dubar + alpha ubar
        out[: K + 1, 1:] = (l + alpha) * c
    else:
        raise ValueError(f"{op} is not a single-variable generator")
    return out


def apply_algebra(op: AlgebraOp | str, f: CoefMatrix) -> CoefMatrix:
    """
    Apply an algebra generator to a polynomial vector.

    Degree bounds grow by at most one in each variable.

    Examples
    --------
    >>> apply_algebra(AlgebraOp.M0, CoefMatrix.monomial(2.0, 0, 0)).coeffs[0, 0]
    (2+0j)
    """
    op = AlgebraOp(op)
    terms = _COMBINATIONS.get(op, ((op, 1),))
    total = sum(sign * _apply_primitive(prim, f.coeffs, f.alpha) for prim, sign in terms)
    return CoefMatrix(f.alpha, total).trimmed()


def commutator(a: AlgebraOp | str, b: AlgebraOp | str, f: CoefMatrix) -> CoefMatrix:
    """``[a, b] f = a(b f) - b(a f)``."""
    return apply_algebra(a, apply_algebra(b, f)) - apply_algebra(b, apply_algebra(a, f))


@dataclass(frozen=True)
class StructureFit:
    """
    Expansion of a commutator in a basis of generators.

    Attributes
    ----------
    coefficients : Dict[AlgebraOp, complex]
        Least-squares coefficient of each basis element.
    residual : float
        Norm of the fit residual relative to the norm of the commutator (or 1 if it vanishes).
    """
    coefficients: Dict[AlgebraOp, complex]
    residual: float

    def rounded(self, digits: int = 10) -> Dict[str, complex]:
        """Coefficients rounded for display, keyed by generator name."""
        return {op.value: complex(round(c.real, digits), round(c.imag, digits))
                for op, c in self.coefficients.items()}


def structure_constants(
    a: AlgebraOp | str,
    b: AlgebraOp | str,
    basis: Sequence[AlgebraOp | str],
    degree: int = 4,
    alpha: "Alpha | float" = 2.0,
) -> StructureFit:
    """
    Expand ``[a, b]`` in the span of ``basis`` by least squares on monomial actions.

    All monomials ``z**k ubar**l`` with ``k, l <= degree`` are used as probe vectors.

    Examples
    --------
    >>> fit = structure_constants("L1", "Lm1", ["L0", "L1", "Lm1"])
    >>> round(fit.coefficients[AlgebraOp.L0].real, 12)
    2.0
    """
    ops = [AlgebraOp(op) for op in basis]
    size = degree + 3
    target_blocks, column_blocks = [], []
    for k in range(degree + 1):
        for l in range(degree + 1):
            probe = CoefMatrix.monomial(alpha, k, l)
            target_blocks.append(commutator(a, b, probe).padded(size, size).coeffs.ravel())
            column_blocks.append(np.stack(
                [apply_algebra(op, probe).padded(size, size).coeffs.ravel() for op in ops], axis=1
            ))
    target = np.concatenate(target_blocks)
    matrix = np.concatenate(column_blocks, axis=0)
    solution, *_ = np.linalg.lstsq(matrix, target, rcond=None)
    residual = np.linalg.norm(matrix @ solution - target) / max(np.linalg.norm(target), 1.0)
    logger.debug("Fitted [%s, %s] with residual %.3e", a, b, residual)
    return StructureFit(dict(zip(ops, (complex(x) for x in solution))), float(residual))


# --- Group Action ---------------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupElement:
    """
    Element ``[[a, b], [conj(b), conj(a)]]`` of SU(1, 1), with ``|a|**2 - |b|**2 = 1``.

    Examples
    --------
    >>> g = GroupElement.boost(0.3)
    >>> abs(g.compose(g.inverse()).a - 1) < 1e-12
    True
    """
    a: complex
    b: complex

    def __post_init__(self) -> None:
        a, b = complex(self.a), complex(self.b)
        defect = abs(a) ** 2 - abs(b) ** 2 - 1
        if not abs(defect) <= NORMALISATION_TOL:
            raise ValidationError(f"|a|^2 - |b|^2 = {1 + defect} for ({a}, {b}), required 1.")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls(1.0, 0.0)

    @classmethod
    def rotation(cls, tau: float) -> "GroupElement":
        """``a = exp(i tau)``, ``b = 0``."""
        return cls(np.exp(1j * tau), 0.0)

    @classmethod
    def boost(cls, t: float) -> "GroupElement":
        """``a = cosh t``, ``b = sinh t``."""
        return cls(np.cosh(t), np.sinh(t))

    @classmethod
    def from_params(cls, t: float, tau1: float, tau2: float) -> "GroupElement":
        """Product ``rotation(tau1) boost(t) rotation(tau2)``."""
        return cls.rotation(tau1).compose(cls.boost(t)).compose(cls.rotation(tau2))

    def compose(self, other: "GroupElement") -> "GroupElement":
        """Matrix product ``self @ other``."""
        a = self.a * other.a + self.b * np.conj(other.b)
        b = self.a * other.b + self.b * np.conj(other.a)
        # renormalise to absorb rounding drift
        scale = np.sqrt(abs(a) ** 2 - abs(b) ** 2)
        return GroupElement(a / scale, b / scale)

    def inverse(self) -> "GroupElement":
        return GroupElement(np.conj(self.a), -self.b)

    def mobius(self, z: Any) -> Any:
        """``(a z + b) / (conj(b) z + conj(a))``."""
        return (self.a * z + self.b) / (np.conj(self.b) * z + np.conj(self.a))


@dataclass(frozen=True, eq=False)
class GroupAction:
    """
    Truncated image of a vector under the group action.

    Attributes
    ----------
    result : CoefMatrix
        Coefficients up to the truncation degree in each variable.
    tail_estimate : float
        Norm of the outermost retained shell ``max(k, l) = trunc``.
    """
    result: CoefMatrix
    tail_estimate: float


def _series_factor(lead: complex, shift: complex, ratio: complex, nu: float, degree: int,
                   trunc: int) -> ComplexArray:
    """
    Coefficients of ``(lead x + shift)**degree * (1 + ratio x)**(-nu)`` up to ``x**trunc``.
    """
    j = np.arange(degree + 1)
    head = comb(degree, j) * lead ** j * shift ** (degree - j)
    tail = np.ones(trunc + 1, dtype=complex)
    for n in range(1, trunc + 1):
        tail[n] = tail[n - 1] * (nu + n - 1) / n * (-ratio)
    return np.convolve(head, tail)[: trunc + 1]


def apply_group(g: GroupElement, f: CoefMatrix, trunc: int) -> GroupAction:
    """
    Diagonal action of ``g`` on a polynomial vector, truncated to degree ``trunc``.

    The image is
    ``f((a z + b)/(conj(b) z + conj(a)), (conj(a) ubar + conj(b))/(b ubar + a))
    * (1 + conj(b)/conj(a) z)**(-alpha) * (1 + b/a ubar)**(-alpha) * |a|**(-2 alpha)``,
    expanded by binomial series.

    Parameters
    ----------
    g : GroupElement
        Group element.
    f : CoefMatrix
        Vector to transform.
    trunc : int
        Truncation degree, at least the degree bounds of ``f``.

    Returns
    -------
    GroupAction
        Truncated image and norm of its outermost retained shell.

    Notes
    -----
    Applying ``g2`` and then ``g1`` equals applying ``g2.compose(g1)``.
    """
    K, L = f.degree
    if trunc < max(K, L):
        raise RangeValidationError(trunc, ge=max(K, L), name="trunc")
    a, b, alpha = g.a, g.b, f.alpha
    ac, bc = np.conj(a), np.conj(b)
    tz = np.stack([_series_factor(a, b, bc / ac, alpha + k, k, trunc) * ac ** (-k)
                   for k in range(K + 1)], axis=1)
    tu = np.stack([_series_factor(ac, bc, b / a, alpha + l, l, trunc) * a ** (-l)
                   for l in range(L + 1)], axis=1)
    coeffs = abs(a) ** (-2 * alpha) * tz @ f.coeffs @ tu.T
    w = monomial_norms(alpha, trunc)
    kk, ll = np.meshgrid(np.arange(trunc + 1), np.arange(trunc + 1), indexing="ij")
    shell = np.maximum(kk, ll) == trunc
    tail = float(np.sqrt(np.sum((np.abs(coeffs) ** 2 * w[:, None] * w[None, :])[shell])))
    return GroupAction(CoefMatrix(alpha, coeffs), tail)


def truncated_norms(g: GroupElement, f: CoefMatrix, truncs: Iterable[int]) -> FloatArray:
    """Norms of the truncated images of ``f`` for several truncation degrees."""
    return np.array([apply_group(g, f, n).result.norm() for n in truncs])
