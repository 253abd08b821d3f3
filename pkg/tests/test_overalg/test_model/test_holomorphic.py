"""
test_overalg.test_model.test_holomorphic
========================================

Tests for the overalg package (holomorphic model).

See Also
--------
overalg.model.holomorphic
"""
import numpy as np
import pytest

from overalg.core.errors.numerics import AlphaMismatchError
from overalg.core.errors.validation import (
    RangeValidationError,
    TypeValidationError,
    ValidationError,
)
from overalg.model.holomorphic import (
    AlgebraOp,
    Alpha,
    CoefMatrix,
    GroupElement,
    apply_algebra,
    apply_group,
    commutator,
    inner_product,
    monomial_norms,
    structure_constants,
    truncated_norms,
)


# --- Weight and Coefficient Matrices --------------------------------------------------------------

class TestAlpha:

    def test_valid(self):
        assert float(Alpha(2)) == 2.0

    @pytest.mark.parametrize("value", [1.0, 0.5, float("inf"), float("nan")])
    def test_out_of_range(self, value):
        with pytest.raises(RangeValidationError):
            Alpha(value)

    def test_bool_rejected(self):
        with pytest.raises(TypeValidationError):
            Alpha(True)

    def test_coerce(self):
        assert Alpha.coerce(Alpha(3.0)) == 3.0
        assert Alpha.coerce(2.5) == 2.5


def test_monomial_norms():
    np.testing.assert_allclose(monomial_norms(2.0, 3), [1.0, 0.5, 1 / 3, 0.25])


class TestCoefMatrix:

    def test_rejects_empty(self):
        with pytest.raises(ValidationError):
            CoefMatrix(2.0, np.zeros((0, 2)))

    def test_rejects_non_finite(self):
        with pytest.raises(ValidationError):
            CoefMatrix(2.0, [[np.nan]])

    def test_coefficients_read_only(self):
        f = CoefMatrix.monomial(2.0, 1, 1)
        with pytest.raises(ValueError):
            f.coeffs[0, 0] = 1

    def test_arithmetic_pads(self):
        f = CoefMatrix.monomial(2.0, 2, 0) + CoefMatrix.monomial(2.0, 0, 1, 3.0)
        assert f.degree == (2, 1)
        assert f.coeffs[0, 1] == 3.0

    def test_alpha_mismatch(self):
        with pytest.raises(AlphaMismatchError):
            CoefMatrix.zero(2.0) + CoefMatrix.zero(3.0)

    def test_evaluate_broadcasts(self):
        f = CoefMatrix(2.0, [[1.0, 2.0], [3.0, 0.0]])  # 1 + 2 ubar + 3 z
        z = np.array([0.1, 0.2])
        np.testing.assert_allclose(f.evaluate(z, 0.5), 1 + 1.0 + 3 * z)

    def test_json_round_trip(self, rng):
        f = CoefMatrix.random(2.5, 3, rng)
        assert CoefMatrix.from_json(f.to_json()).allclose(f)

    def test_trimmed(self):
        f = CoefMatrix(2.0, np.pad([[1.0]], ((0, 3), (0, 2))))
        assert f.trimmed().degree == (0, 0)

    def test_norm_of_monomial(self):
        f = CoefMatrix.monomial(2.0, 1, 2)
        assert f.norm() == pytest.approx(np.sqrt(0.5 / 3))


def test_inner_product_hermitian(rng, alpha):
    f = CoefMatrix.random(alpha, 3, rng)
    g = CoefMatrix.random(alpha, 2, rng)
    assert inner_product(f, g) == pytest.approx(np.conj(inner_product(g, f)), rel=1e-14)
    assert inner_product(f, f).real == pytest.approx(f.norm() ** 2, rel=1e-14)


# --- Lie Algebra ----------------------------------------------------------------------------------

class TestAlgebra:

    def test_m0_on_constant(self):
        """``M0 1 = alpha``."""
        f = apply_algebra(AlgebraOp.M0, CoefMatrix.monomial(2.5, 0, 0))
        assert f.coeffs[0, 0] == pytest.approx(2.5)

    def test_m1_on_constant(self):
        """``M1 1 = alpha z``."""
        f = apply_algebra("M1", CoefMatrix.monomial(2.5, 0, 0))
        assert f.degree == (1, 0)
        assert f.coeffs[1, 0] == pytest.approx(2.5)

    def test_lowering_kills_constants(self):
        f = apply_algebra(AlgebraOp.Lm1z, CoefMatrix.monomial(2.0, 0, 3))
        assert np.allclose(f.coeffs, 0)

    def test_degree_grows_by_one(self, rng):
        f = CoefMatrix.random(2.0, 3, rng)
        for op in AlgebraOp:
            K, L = apply_algebra(op, f).degree
            assert K <= 4 and L <= 4

    @pytest.mark.parametrize("a, b, expected", [
        ("L0", "L1", {"L1": 1}),
        ("L0", "Lm1", {"Lm1": -1}),
        ("L1", "Lm1", {"L0": 2}),
        ("L0", "M1", {"M1": 1}),
        ("M0", "M1", {"L1": 1}),
        ("M1", "Mm1", {"L0": -2}),
    ])
    def test_structure_constants(self, a, b, expected):
        basis = ["L0", "L1", "Lm1", "M0", "M1", "Mm1"]
        fit = structure_constants(a, b, basis, degree=3, alpha=2.5)
        assert fit.residual < 1e-12
        rounded = fit.rounded()
        for name in basis:
            assert rounded[name] == pytest.approx(expected.get(name, 0), abs=1e-10)

    def test_copies_commute(self, rng):
        f = CoefMatrix.random(2.0, 3, rng)
        assert np.allclose(commutator("L1z", "Lm1u", f).coeffs, 0, atol=1e-12)

    def test_m0_self_adjoint(self, rng, alpha):
        f = CoefMatrix.random(alpha, 4, rng)
        g = CoefMatrix.random(alpha, 4, rng)
        lhs = inner_product(apply_algebra("M0", f), g)
        rhs = inner_product(f, apply_algebra("M0", g))
        assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), 1.0)


# --- Group Action ---------------------------------------------------------------------------------

class TestGroup:

    def test_normalisation_enforced(self):
        with pytest.raises(ValidationError):
            GroupElement(1.0, 0.5)

    def test_inverse(self):
        g = GroupElement.from_params(0.4, 0.3, -1.1)
        e = g.compose(g.inverse())
        assert abs(e.a - 1) < 1e-12 and abs(e.b) < 1e-12

    def test_mobius_preserves_disc(self, rng):
        g = GroupElement.from_params(1.2, 0.1, 2.0)
        z = 0.9 * np.exp(2j * np.pi * rng.random(50)) * rng.random(50)
        assert np.all(np.abs(g.mobius(z)) < 1)

    def test_identity_action(self, rng):
        f = CoefMatrix.random(2.0, 3, rng)
        action = apply_group(GroupElement.identity(), f, 3)
        assert action.result.allclose(f)

    def test_rotation_multiplies_by_phase(self, rng, alpha):
        f = CoefMatrix.random(alpha, 3, rng)
        tau = 0.7
        action = apply_group(GroupElement.rotation(tau), f, 5)
        k = np.arange(4)[:, None]
        l = np.arange(4)[None, :]
        np.testing.assert_allclose(action.result.coeffs[:4, :4],
                                   f.coeffs * np.exp(2j * (k - l) * tau), atol=1e-13)
        assert action.tail_estimate == pytest.approx(0.0, abs=1e-14)

    def test_truncation_below_degree(self, rng):
        with pytest.raises(RangeValidationError):
            apply_group(GroupElement.boost(0.1), CoefMatrix.random(2.0, 3, rng), 2)

    def test_composition_order(self, rng):
        """Applying ``g2`` and then ``g1`` equals applying ``g2.compose(g1)``."""
        f = CoefMatrix.random(2.0, 2, rng)
        g1 = GroupElement.from_params(0.1, 0.3, 0.2)
        g2 = GroupElement.from_params(0.15, -0.4, 0.5)
        trunc = 40
        two_steps = apply_group(g1, apply_group(g2, f, trunc).result, trunc).result
        one_step = apply_group(g2.compose(g1), f, trunc).result
        np.testing.assert_allclose(two_steps.coeffs[:6, :6], one_step.coeffs[:6, :6], atol=1e-10)

    def test_norm_defect_decreases(self, rng, alpha):
        """
        Test that truncated images approach the norm of the vector from below, with a strictly
        decreasing defect.
        """
        f = CoefMatrix.random(alpha, 2, rng)
        g = GroupElement.boost(0.5)
        norms = truncated_norms(g, f, range(2, 14))
        defects = f.norm() - norms
        assert np.all(np.diff(defects) < 0)
        assert truncated_norms(g, f, [80])[0] == pytest.approx(f.norm(), rel=1e-8)
