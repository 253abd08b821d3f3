"""
overalg.spectral.transform
==========================

Intertwining transform from polynomial vectors to functions of ``(phi, s)``.

The transform of ``f`` is

``J f(phi, s) = int_D int_D f(z, ubar) K(phi, s; z, u) (1 - |z|^2)^{alpha-2} (1 - |u|^2)^{alpha-2} dz du``

which, by orthogonality of monomials, maps ``c[k, l]`` to
``d[k, l] = c[k, l] (pi / (alpha - 1))**2 w_k w_l`` with ``w_k = k! / (alpha)_k``.

Classes
-------
SpectralFunction
    Image of a polynomial vector, stored through its coefficients.

Functions
---------
transform
    Closed-form transform.
quadrature_transform
    Direct numerical evaluation of the defining double integral.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, List

import numpy as np

from overalg.core.arith import gauss_jacobi, integrate_until_stable
from overalg.core.errors.numerics import AlphaMismatchError
from overalg.core.types import ComplexArray
from overalg.model.holomorphic import Alpha, CoefMatrix, monomial_norms
from overalg.spectral.kernel import kernel_coeff_table, kernel_eval

logger = logging.getLogger(__name__)


def transform_scale(alpha: "Alpha | float") -> float:
    """Normalising constant ``(pi / (alpha - 1))**2`` of the transform."""
    return (np.pi / (Alpha.coerce(alpha) - 1)) ** 2


# --- Spectral Function ----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SpectralFunction:
    """
    Function ``F(phi, s) = sum_kl d[k, l] e^{i (k - l) phi} A_kl(s)``.

    Attributes
    ----------
    alpha : float
        Weight.
    coeffs : ComplexArray
        Read-only matrix ``d`` of shape ``(K + 1, L + 1)``.

    Notes
    -----
    ``F`` is a trigonometric polynomial in ``phi`` whose Fourier modes ``G_m(s)`` are polynomials
    in ``s``, hence entire.
    """
    alpha: float
    coeffs: ComplexArray

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Alpha.coerce(self.alpha))
        arr = np.array(self.coeffs, dtype=complex)
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def degree(self) -> tuple[int, int]:
        rows, cols = self.coeffs.shape
        return rows - 1, cols - 1

    @property
    def polynomial_degree(self) -> int:
        """Upper bound on the degree in ``s`` of the Fourier modes."""
        nonzero = np.argwhere(self.coeffs != 0)
        return int((nonzero[:, 0] + nonzero[:, 1]).max()) if nonzero.size else 0

    @property
    def modes(self) -> List[int]:
        """Fourier modes ``m = k - l`` carrying a nonzero coefficient."""
        return sorted({int(k - l) for k, l in np.argwhere(self.coeffs != 0)})

    def mode_functions(self, s: Any) -> Dict[int, Any]:
        """
        Fourier modes ``G_m(s) = sum_{k - l = m} d[k, l] A_kl(s)``.

        Returns
        -------
        Dict[int, Any]
            Arrays of the shape of ``s`` keyed by mode; empty for the zero function.
        """
        K, L = self.degree
        table = kernel_coeff_table(K, L, s, self.alpha)
        weighted = self.coeffs.reshape(self.coeffs.shape + (1,) * (table.ndim - 2)) * table
        result = {}
        for m in self.modes:
            k = np.arange(max(m, 0), min(K, L + m) + 1)
            result[m] = weighted[k, k - m].sum(axis=0)
        return result

    def evaluate(self, phi: Any, s: Any) -> Any:
        """Value ``F(phi, s)``, broadcasting ``phi`` against ``s``."""
        phi, s = np.broadcast_arrays(np.asarray(phi, dtype=float), np.asarray(s, dtype=complex))
        total = np.zeros(s.shape, dtype=complex)
        for m, g in self.mode_functions(s).items():
            total += np.exp(1j * m * phi) * g
        return total.item() if total.ndim == 0 else total

    def __call__(self, phi: Any, s: Any) -> Any:
        return self.evaluate(phi, s)

    def _aligned(self, other: "SpectralFunction") -> tuple[ComplexArray, ComplexArray]:
        if self.alpha != other.alpha:
            raise AlphaMismatchError(self.alpha, other.alpha)
        K = max(self.degree[0], other.degree[0])
        L = max(self.degree[1], other.degree[1])
        a = np.zeros((K + 1, L + 1), dtype=complex)
        b = np.zeros((K + 1, L + 1), dtype=complex)
        a[: self.coeffs.shape[0], : self.coeffs.shape[1]] = self.coeffs
        b[: other.coeffs.shape[0], : other.coeffs.shape[1]] = other.coeffs
        return a, b

    def __add__(self, other: "SpectralFunction") -> "SpectralFunction":
        a, b = self._aligned(other)
        return SpectralFunction(self.alpha, a + b)

    def __sub__(self, other: "SpectralFunction") -> "SpectralFunction":
        a, b = self._aligned(other)
        return SpectralFunction(self.alpha, a - b)

    def __mul__(self, scalar: complex) -> "SpectralFunction":
        return SpectralFunction(self.alpha, self.coeffs * scalar)

    __rmul__ = __mul__


# --- Transform ------------------------------------------------------------------------------------

def transform(f: CoefMatrix) -> SpectralFunction:
    """
    Closed-form transform of a polynomial vector.

    Examples
    --------
    >>> F = transform(CoefMatrix.monomial(2.0, 0, 0))
    >>> abs(F.evaluate(0.4, 1.3) - np.pi**2) < 1e-12
    True
    """
    K, L = f.degree
    w = monomial_norms(f.alpha, max(K, L))
    d = f.coeffs * transform_scale(f.alpha) * w[: K + 1, None] * w[None, : L + 1]
    return SpectralFunction(f.alpha, d)


def quadrature_transform(f: CoefMatrix, phi: float, s: complex, tol: float = 1e-10,
                         radius: float = 0.5, max_refinements: int = 4) -> complex:
    """
    Evaluate the transform at one point by direct quadrature of its defining integral.

    In polar coordinates ``z = r1 e^{i t1}``, ``u = r2 e^{i t2}``:

    - the radial integrals are taken in ``t = r**2`` with a Gauss-Jacobi rule for the boundary
      weight ``(1 - t)**(alpha - 2)``;
    - for each radius, the angular integrand is written in ``zbar`` and ``u`` (with
      ``z = r1**2 / zbar`` and ``ubar = r2**2 / u``), which is meromorphic in the disc with its only
      pole at the origin, so the circles of integration are moved to ``|zbar| = |u| = radius``
      and the trapezoid rule is applied there.

    Angular nodes and radial order double until two successive values differ by less than
    ``tol``.

    Raises
    ------
    ConvergenceError
        If the value is not stable after ``max_refinements`` doublings.
    """
    alpha = f.alpha
    K, L = f.degree

    def evaluate(level: int) -> complex:
        n_angle = 2 ** level * max(16, 2 * (K + L + 2))
        n_radial = 2 ** level * max(4, (max(K, L) + 2) // 2)
        radial = gauss_jacobi(n_radial, alpha - 2)
        circle = radius * np.exp(2j * np.pi * np.arange(n_angle) / n_angle)
        x, y = np.meshgrid(circle, circle, indexing="ij")
        kernel = kernel_eval(phi, s, np.conj(x), y, alpha)
        total = 0.0 + 0.0j
        for t1, w1 in zip(radial.nodes, radial.weights):
            # f(t1 / x, t2 / y) for every radial node t2 at once
            values = f.evaluate(t1 / x[None, :, :], radial.nodes[:, None, None] / y[None, :, :])
            angular = np.mean(values * kernel[None, :, :], axis=(1, 2))
            total += w1 * np.dot(radial.weights, angular)
        # d^2z = (1/2) dt dtheta in each variable; the angular means carry (2 pi)^2
        return complex(total * np.pi**2)

    value, estimate, level = integrate_until_stable(
        evaluate, start=0, tol=tol, max_refinements=max_refinements, quantity="quadrature transform"
    )
    logger.debug("Quadrature transform converged at level %d (change %.2e)", level, estimate)
    return value
