"""
overalg.spectral.kernel
=======================

Intertwining kernel between the holomorphic tensor product and the spectral side, and its Taylor
coefficients.

The kernel is

``K(phi, s; z, u) = (1 - zbar e^{i phi})^{-beta} (1 - u e^{-i phi})^{-beta} (1 - zbar u)^{-gamma}``

with ``beta = 1/2 + i s`` and ``gamma = alpha - 1/2 - i s``. Its coefficient of
``zbar**k u**l`` is ``e^{i (k - l) phi} A_kl(s)``.

Functions
---------
kernel_eval
    Pointwise kernel with principal powers.
kernel_coeff
    Single Taylor coefficient of the kernel.
kernel_coeff_table
    Table of ``A_kl(s)``, vectorised over ``s``.
extract_kernel_coeffs
    Taylor coefficients recovered numerically by Cauchy integrals on a torus.
"""
import logging
from typing import Any

import numpy as np

from overalg.core.errors.numerics import BranchError, DomainError
from overalg.core.types import ComplexArray, ComplexLike
from overalg.model.holomorphic import Alpha

logger = logging.getLogger(__name__)


def spectral_exponents(s: ComplexLike, alpha: float) -> tuple[Any, Any]:
    """Exponents ``beta = 1/2 + i s`` and ``gamma = alpha - 1/2 - i s``."""
    s = np.asarray(s, dtype=complex)
    return 0.5 + 1j * s, alpha - 0.5 - 1j * s


def _principal_power(base: Any, exponent: Any) -> Any:
    """``base**(-exponent)`` on the principal branch, for bases in the right half-plane."""
    if np.any(np.real(base) <= 0):
        raise BranchError(np.asarray(base)[np.real(base) <= 0].ravel()[0])
    return np.exp(-exponent * np.log(base))


def kernel_eval(phi: Any, s: ComplexLike, z: ComplexLike, u: ComplexLike,
                alpha: "Alpha | float") -> Any:
    """
    Evaluate the kernel at ``(phi, s; z, u)``, broadcasting arrays.

    Parameters
    ----------
    phi : float or array
        Angle.
    s : complex or array
        Spectral parameter (complex values allowed for shifted evaluations).
    z, u : complex or array
        Points of the unit disc.
    alpha : Alpha | float
        Weight.

    Raises
    ------
    DomainError
        If ``|z| >= 1`` or ``|u| >= 1``.
    BranchError
        If a base of the principal powers leaves the right half-plane.

    Examples
    --------
    >>> kernel_eval(0.3, 1.2, 0, 0, 2.0)
    (1+0j)
    """
    a = Alpha.coerce(alpha)
    z, u = np.asarray(z, dtype=complex), np.asarray(u, dtype=complex)
    if np.any(np.abs(z) >= 1) or np.any(np.abs(u) >= 1):
        raise DomainError((z, u), "|z| < 1 and |u| < 1")
    beta, gamma = spectral_exponents(s, a)
    rot = np.exp(1j * np.asarray(phi, dtype=float))
    zbar = np.conj(z)
    value = (_principal_power(1 - zbar * rot, beta)
             * _principal_power(1 - u / rot, beta)
             * _principal_power(1 - zbar * u, gamma))
    return value.item() if np.ndim(value) == 0 else value


def _rising_ratios(x: Any, n: int) -> ComplexArray:
    """``(x)_j / j!`` for ``j = 0 .. n``, stacked along a new first axis."""
    x = np.asarray(x, dtype=complex)
    out = np.empty((n + 1,) + x.shape, dtype=complex)
    out[0] = 1
    for j in range(1, n + 1):
        out[j] = out[j - 1] * (x + j - 1) / j
    return out


def kernel_coeff_table(K: int, L: int, s: ComplexLike, alpha: "Alpha | float") -> ComplexArray:
    """
    Table of ``A_kl(s)`` for ``k <= K``, ``l <= L``.

    ``A_kl(s) = sum_{m <= min(k, l)} (gamma)_m/m! (beta)_{k-m}/(k-m)! (beta)_{l-m}/(l-m)!``.

    Returns
    -------
    ComplexArray
        Array of shape ``(K + 1, L + 1) + shape(s)``.
    """
    a = Alpha.coerce(alpha)
    beta, gamma = spectral_exponents(s, a)
    b = _rising_ratios(beta, max(K, L))
    g = _rising_ratios(gamma, min(K, L))
    table = np.zeros((K + 1, L + 1) + beta.shape, dtype=complex)
    for m in range(min(K, L) + 1):
        table[m:, m:] += g[m] * b[: K + 1 - m][:, None] * b[: L + 1 - m][None, :]
    return table


def kernel_coeff(k: int, l: int, phi: Any, s: ComplexLike, alpha: "Alpha | float") -> Any:
    """
    Coefficient ``e^{i (k - l) phi} A_kl(s)`` of ``zbar**k u**l`` in the kernel.

    Examples
    --------
    >>> kernel_coeff(0, 0, 0.7, 2.0, 3.0)
    (1+0j)
    >>> kernel_coeff(1, 0, 0.0, 0.0, 2.0)
    (0.5+0j)
    """
    value = np.exp(1j * (k - l) * np.asarray(phi, dtype=float)) * kernel_coeff_table(k, l, s, alpha)[k, l]
    return value.item() if np.ndim(value) == 0 else value


def extract_kernel_coeffs(phi: float, s: complex, alpha: "Alpha | float", K: int, L: int,
                          radius: float = 0.7, nodes: int = 128) -> ComplexArray:
    """
    Taylor coefficients of the kernel in ``(zbar, u)`` by Cauchy integrals on a torus.

    The kernel is sampled on ``|zbar| = |u| = radius`` and the trapezoid rule is applied through a
    two-dimensional FFT. The aliasing error is of order ``radius**nodes``.

    Returns
    -------
    ComplexArray
        Coefficients ``c[k, l]`` for ``k <= K``, ``l <= L``.
    """
    if not 0 < radius < 1:
        raise DomainError(radius, "0 < radius < 1")
    if nodes <= max(K, L):
        raise DomainError(nodes, f"nodes > {max(K, L)}")
    circle = radius * np.exp(2j * np.pi * np.arange(nodes) / nodes)
    x, y = np.meshgrid(circle, circle, indexing="ij")
    samples = kernel_eval(phi, s, np.conj(x), y, alpha)
    coeffs = np.fft.fft2(samples) / nodes**2
    scale = radius ** (np.arange(K + 1)[:, None] + np.arange(L + 1)[None, :])
    return coeffs[: K + 1, : L + 1] / scale
