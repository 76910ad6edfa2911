"""
Tests for parameter and state records and the model registry.
"""
import numpy as np
from django.test import SimpleTestCase

from core.exceptions import ConfigurationError, DimensionError, DomainError
from core.types import FractionalOrder
from epidemic.fields import SirsField, SisLegacyField
from epidemic.params import SirsParams, SirsState, SisParams, SisState
from epidemic.registry import MODELS, get_model


class ParamsTests(SimpleTestCase):
    """Test the rate records."""

    def test_defaults_to_integer_order(self):
        """Test alpha defaults to 1."""
        params = SisParams(0.01, 0.06, 0.01, 0.02, 0.2)
        self.assertEqual(params.alpha, FractionalOrder(1.0))

    def test_effective_rates(self):
        """Test every rate is raised to alpha."""
        params = SirsParams(0.01, 0.5, 0.01, 0.2, 0.015, 0.02, alpha=0.5)
        effective = params.effective()
        self.assertAlmostEqual(effective['recruitment'], 0.1, places=15)
        self.assertAlmostEqual(effective['immunity_loss'], 0.02 ** 0.5, places=15)
        self.assertEqual(set(effective), set(SirsParams.rate_names))

    def test_with_alpha(self):
        """Test with_alpha rebinds the order and keeps the rates."""
        params = SisParams(0.01, 0.45, 0.01, 0.2, 0.05)
        rebound = params.with_alpha(0.9)
        self.assertEqual(rebound.alpha.alpha, 0.9)
        self.assertEqual(rebound.raw(), params.raw())

    def test_invalid_rates(self):
        """Test non-positive or non-numeric rates raise DomainError."""
        with self.assertRaises(DomainError):
            SisParams(0.01, 0.0, 0.01, 0.02, 0.2)
        with self.assertRaises(DomainError):
            SirsParams(0.01, 0.5, -0.01, 0.2, 0.015, 0.02)
        with self.assertRaises(DomainError):
            SisParams(0.01, 'fast', 0.01, 0.02, 0.2)

    def test_invalid_order(self):
        """Test alpha outside (0, 1] raises DomainError."""
        with self.assertRaises(DomainError):
            SisParams(0.01, 0.06, 0.01, 0.02, 0.2, alpha=1.5)


class StateTests(SimpleTestCase):
    """Test the compartment records."""

    def test_from_vector(self):
        """Test building a state from a vector and reading it back."""
        state = SirsState.from_vector([0.6, 0.1, 0.3])
        self.assertEqual(state.infected, 0.1)
        self.assertAlmostEqual(state.total, 1.0)
        np.testing.assert_array_equal(state.as_vector(), [0.6, 0.1, 0.3])

    def test_wrong_size(self):
        """Test a vector of the wrong size raises DimensionError."""
        with self.assertRaises(DimensionError):
            SisState.from_vector([0.6, 0.1, 0.3])

    def test_negative_or_non_finite(self):
        """Test negative and non-finite compartments raise DomainError."""
        with self.assertRaises(DomainError):
            SisState(0.5, -1e-9)
        with self.assertRaises(DomainError):
            SisState(float('nan'), 0.5)


class RegistryTests(SimpleTestCase):
    """Test the model registry."""

    def test_models(self):
        """Test the registered models and their dimensions."""
        self.assertEqual(set(MODELS), {'sis', 'sirs', 'sis-legacy'})
        self.assertEqual(get_model('sis').dimension, 2)
        self.assertEqual(get_model('sirs').dimension, 3)
        self.assertEqual(get_model('sis-legacy').analysis, 'sis')

    def test_field_factory(self):
        """Test the registry builds the matching solver field."""
        sirs = SirsParams(0.01, 0.5, 0.01, 0.2, 0.015, 0.02)
        self.assertIsInstance(get_model('sirs').field(sirs), SirsField)
        legacy = SisParams(0.01, 0.06, 0.01, 0.02, 0.2)
        self.assertIsInstance(get_model('sis-legacy').field(legacy), SisLegacyField)

    def test_unknown_model(self):
        """Test an unknown model name raises ConfigurationError."""
        with self.assertRaises(ConfigurationError):
            get_model('seir')
