"""
Tests for the gamma and Mittag-Leffler functions.
"""
import math

from django.test import SimpleTestCase
from scipy import integrate, special

from core.exceptions import DomainError, GammaOverflowError
from solver.special import gamma_fn, mittag_leffler_1p


class GammaTests(SimpleTestCase):
    """Test the Lanczos gamma function."""

    def test_factorials(self):
        """Test Gamma(n) = (n - 1)!."""
        self.assertAlmostEqual(gamma_fn(1), 1.0, places=14)
        self.assertAlmostEqual(gamma_fn(5), 24.0, places=11)
        self.assertAlmostEqual(gamma_fn(11) / math.factorial(10), 1.0, places=13)

    def test_half(self):
        """Test Gamma(1/2) = sqrt(pi)."""
        self.assertAlmostEqual(gamma_fn(0.5), math.sqrt(math.pi), places=13)

    def test_matches_reference(self):
        """Test agreement with the standard library across the range used by the solver."""
        for x in (0.01, 0.1, 0.3, 0.9, 1.5, 1.9, 2.0, 7.25, 30.5, 100.0, 170.5):
            with self.subTest(x=x):
                self.assertLess(abs(gamma_fn(x) / math.gamma(x) - 1), 1e-12)

    def test_matches_euler_integral(self):
        """Test agreement with the integral of t^(x-1) e^(-t) over [0, inf)."""
        for x in (1.0, 1.5, 2.5, 4.2, 7.25):
            with self.subTest(x=x):
                value, _ = integrate.quad(lambda t: t ** (x - 1) * math.exp(-t), 0, math.inf)
                self.assertLess(abs(gamma_fn(x) / value - 1), 1e-8)

    def test_domain(self):
        """Test non-positive arguments raise DomainError."""
        for x in (0, -1, -0.5, float('nan')):
            with self.assertRaises(DomainError):
                gamma_fn(x)

    def test_overflow(self):
        """Test arguments beyond double range raise GammaOverflowError."""
        with self.assertRaises(GammaOverflowError):
            gamma_fn(172)


class MittagLefflerTests(SimpleTestCase):
    """Test the one-parameter Mittag-Leffler series."""

    def test_exponential_case(self):
        """Test E_1(z) = exp(z)."""
        self.assertAlmostEqual(mittag_leffler_1p(1, -1), 0.3678794412, places=10)
        self.assertAlmostEqual(mittag_leffler_1p(1, 2) / math.exp(2), 1.0, places=14)

    def test_zero_argument(self):
        """Test E_alpha(0) = 1."""
        for alpha in (0.3, 0.5, 1.0):
            self.assertEqual(mittag_leffler_1p(alpha, 0), 1.0)

    def test_half_order(self):
        """Test E_{1/2}(-x) = exp(x^2) erfc(x) for moderate and large x."""
        self.assertAlmostEqual(mittag_leffler_1p(0.5, -1), 0.4275835762, places=10)
        for x in (0.5, 2.0, 5.0, 10.0, 25.0):
            with self.subTest(x=x):
                expected = special.erfcx(x)
                self.assertLess(abs(mittag_leffler_1p(0.5, -x) / expected - 1), 1e-12)

    def test_argument_guard(self):
        """Test arguments beyond the guard raise DomainError."""
        with self.assertRaises(DomainError):
            mittag_leffler_1p(0.9, -31)

    def test_digit_cap(self):
        """Test small orders with large arguments are refused rather than truncated."""
        with self.assertRaises(DomainError):
            mittag_leffler_1p(0.1, -30)

    def test_invalid_order(self):
        """Test orders outside (0, 1] raise DomainError."""
        with self.assertRaises(DomainError):
            mittag_leffler_1p(1.5, -1)
