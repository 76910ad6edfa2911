"""
Tests for the SIS and SIRS vector fields.
"""
import numpy as np
from django.test import SimpleTestCase

from core.exceptions import DimensionError, DomainError
from epidemic.fields import (
    SirsField,
    SisField,
    SisLegacyField,
    incidence,
    sirs_rhs,
    sirs_rhs_integer,
    sis_rhs,
    sis_rhs_legacy,
    total_population_rate,
)
from epidemic.params import SirsParams, SisParams, effective_rate
from stability.equilibria import sirs_equilibria

SIS_DISEASE_FREE = SisParams(0.01, 0.06, 0.01, 0.02, 0.2)
SIS_ENDEMIC = SisParams(0.01, 0.45, 0.01, 0.2, 0.05)
SIRS_DISEASE_FREE = SirsParams(0.01, 0.06, 0.01, 0.3, 0.15, 0.02)
SIRS_ENDEMIC = SirsParams(0.01, 0.5, 0.01, 0.2, 0.015, 0.02)


def random_sis_params(rng):
    """Draw SIS rates and an order from moderate ranges."""
    return SisParams(*rng.uniform(0.005, 0.5, size=5), alpha=rng.uniform(0.3, 1.0))


def random_sirs_params(rng):
    """Draw SIRS rates and an order from moderate ranges."""
    return SirsParams(*rng.uniform(0.005, 0.5, size=6), alpha=rng.uniform(0.3, 1.0))


class EffectiveRateTests(SimpleTestCase):
    """Test fractionalization of rates."""

    def test_values(self):
        """Test p^alpha for the documented examples."""
        self.assertEqual(effective_rate(0.01, 1), 0.01)
        self.assertAlmostEqual(effective_rate(0.01, 0.5), 0.1, places=15)
        self.assertAlmostEqual(effective_rate(0.23, 0.9), 0.23 ** 0.9, places=15)
        self.assertAlmostEqual(effective_rate(0.23, 0.9), 0.2664128, places=7)

    def test_non_positive_rate(self):
        """Test zero, negative and non-finite rates raise DomainError."""
        for p in (0, -0.1, float('nan'), float('inf')):
            with self.assertRaises(DomainError):
                effective_rate(p, 0.9)

    def test_invalid_order(self):
        """Test orders outside (0, 1] raise DomainError."""
        with self.assertRaises(DomainError):
            effective_rate(0.1, 0)


class SisFieldTests(SimpleTestCase):
    """Test the fractional and legacy SIS fields."""

    def test_disease_free_point_is_stationary(self):
        """Test (Lambda^a / nu^a, 0) annihilates the field."""
        for alpha in (1.0, 0.9, 0.5):
            params = SIS_ENDEMIC.with_alpha(alpha)
            rates = params.effective()
            point = (rates['recruitment'] / rates['natural_death'], 0.0)
            np.testing.assert_allclose(sis_rhs(point, params), [0, 0], atol=1e-15)

    def test_hand_evaluated(self):
        """Test the field at (0.95, 0.05) with the disease-free rates."""
        np.testing.assert_allclose(
            sis_rhs((0.95, 0.05), SIS_DISEASE_FREE), [-0.00135, -0.00865], atol=1e-15,
        )

    def test_endemic_point_is_stationary(self):
        """Test the endemic point annihilates the field."""
        np.testing.assert_allclose(
            sis_rhs((0.1857143, 0.1357143), SIS_ENDEMIC), [0, 0], atol=1e-7,
        )

    def test_empty_population(self):
        """Test incidence vanishes at N = 0, leaving only recruitment."""
        params = SIS_ENDEMIC.with_alpha(0.8)
        np.testing.assert_allclose(
            sis_rhs((0.0, 0.0), params), [0.01 ** 0.8, 0.0], atol=1e-15,
        )

    def test_legacy_matches_at_integer_order(self):
        """Test the legacy field equals the fractional field when alpha = 1."""
        rng = np.random.default_rng(7)
        for _ in range(50):
            params = random_sis_params(rng).with_alpha(1.0)
            state = rng.uniform(0, 1, size=2)
            np.testing.assert_array_equal(sis_rhs(state, params), sis_rhs_legacy(state, params))

    def test_legacy_ignores_order(self):
        """Test the legacy field uses raw rates whatever alpha is."""
        for alpha in (1.0, 0.9, 0.5):
            np.testing.assert_allclose(
                sis_rhs_legacy((0.95, 0.05), SIS_DISEASE_FREE.with_alpha(alpha)),
                [-0.00135, -0.00865],
                atol=1e-15,
            )
        np.testing.assert_allclose(
            sis_rhs_legacy((1.0, 0.0), SIS_ENDEMIC.with_alpha(0.7)), [0, 0], atol=1e-15,
        )

    def test_negative_state_rejected(self):
        """Test negative compartments raise DomainError."""
        with self.assertRaises(DomainError):
            sis_rhs((-0.1, 0.5), SIS_ENDEMIC)

    def test_wrong_dimension(self):
        """Test a three-component state raises DimensionError."""
        with self.assertRaises(DimensionError):
            sis_rhs((0.1, 0.2, 0.3), SIS_ENDEMIC)

    def test_solver_adapters(self):
        """Test the solver adapters agree with the functional forms."""
        params = SIS_ENDEMIC.with_alpha(0.9)
        state = np.array([0.4, 0.2])
        np.testing.assert_array_equal(SisField(params)(0.0, state), sis_rhs(state, params))
        np.testing.assert_array_equal(
            SisLegacyField(params)(0.0, state), sis_rhs_legacy(state, params),
        )
        self.assertEqual(SisField(params).dimension, 2)


class SirsFieldTests(SimpleTestCase):
    """Test the fractional SIRS field."""

    def test_disease_free_point_is_stationary(self):
        """Test (Lambda^a / nu^a, 0, 0) annihilates the field."""
        params = SIRS_ENDEMIC.with_alpha(0.95)
        rates = params.effective()
        point = (rates['recruitment'] / rates['natural_death'], 0.0, 0.0)
        np.testing.assert_allclose(sirs_rhs(point, params), [0, 0, 0], atol=1e-15)

    def test_hand_evaluated(self):
        """Test the field at (0.95, 0.05, 0) with the disease-free rates."""
        np.testing.assert_allclose(
            sirs_rhs((0.95, 0.05, 0.0), SIRS_DISEASE_FREE),
            [-0.00235, -0.02015, 0.015],
            atol=1e-15,
        )

    def test_endemic_point_is_stationary(self):
        """Test the closed-form endemic point annihilates the field."""
        for alpha in (1.0, 0.9):
            params = SIRS_ENDEMIC.with_alpha(alpha)
            point = sirs_equilibria(params).endemic
            np.testing.assert_allclose(sirs_rhs(point, params), [0, 0, 0], atol=1e-12)

    def test_integer_order_field(self):
        """Test the integer-order field equals the fractional one at alpha = 1 only."""
        state = (0.6, 0.1, 0.3)
        np.testing.assert_array_equal(
            sirs_rhs_integer(state, SIRS_ENDEMIC), sirs_rhs(state, SIRS_ENDEMIC),
        )
        fractional = SIRS_ENDEMIC.with_alpha(0.8)
        np.testing.assert_array_equal(
            sirs_rhs_integer(state, fractional), sirs_rhs(state, SIRS_ENDEMIC),
        )
        self.assertFalse(np.allclose(sirs_rhs(state, fractional), sirs_rhs(state, SIRS_ENDEMIC)))

    def test_solver_adapter(self):
        """Test the solver adapter agrees with the functional form."""
        params = SIRS_ENDEMIC.with_alpha(0.9)
        state = np.array([0.4, 0.2, 0.1])
        np.testing.assert_array_equal(SirsField(params)(0.0, state), sirs_rhs(state, params))


class IdentityTests(SimpleTestCase):
    """Test properties that hold for every state and parameter set."""

    def test_total_population_rate(self):
        """Test the compartments sum to Lambda^a - eta^a I - nu^a N."""
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            sis = random_sis_params(rng)
            state = rng.uniform(0, 1, size=2)
            self.assertAlmostEqual(
                sis_rhs(state, sis).sum(), total_population_rate(state, sis), delta=1e-14,
            )
            sirs = random_sirs_params(rng)
            state = rng.uniform(0, 1, size=3)
            self.assertAlmostEqual(
                sirs_rhs(state, sirs).sum(), total_population_rate(state, sirs), delta=1e-14,
            )

    def test_incidence_bounded(self):
        """Test 0 <= phi S I / N <= phi min(S, I)."""
        rng = np.random.default_rng(11)
        for _ in range(500):
            s, i, r = rng.uniform(0, 2, size=3)
            value = incidence(0.3, s, i, s + i + r)
            self.assertGreaterEqual(value, 0.0)
            self.assertLessEqual(value, 0.3 * min(s, i) + 1e-15)

    def test_unsupported_params(self):
        """Test total_population_rate rejects other parameter records."""
        with self.assertRaises(DomainError):
            total_population_rate((0.5, 0.5), object())

    def test_no_infection_without_infected(self):
        """Test the infected component is exactly zero whenever Q_I = 0."""
        rng = np.random.default_rng(5)
        for _ in range(200):
            s, r = rng.uniform(0, 2, size=2)
            self.assertEqual(sis_rhs((s, 0.0), random_sis_params(rng))[1], 0.0)
            self.assertEqual(sis_rhs_legacy((s, 0.0), random_sis_params(rng))[1], 0.0)
            self.assertEqual(sirs_rhs((s, 0.0, r), random_sirs_params(rng))[1], 0.0)

    def test_integer_order_equivalence(self):
        """Test alpha = 1 makes the fractional fields equal the raw-rate fields."""
        rng = np.random.default_rng(19)
        for _ in range(100):
            sis = random_sis_params(rng).with_alpha(1.0)
            state = rng.uniform(0, 1, size=2)
            np.testing.assert_allclose(
                sis_rhs(state, sis), sis_rhs_legacy(state, sis), rtol=0, atol=1e-14,
            )
            sirs = random_sirs_params(rng)
            state = rng.uniform(0, 1, size=3)
            np.testing.assert_allclose(
                sirs_rhs(state, sirs.with_alpha(1.0)), sirs_rhs_integer(state, sirs),
                rtol=0, atol=1e-14,
            )
