"""
Tests for scenario orchestration.
"""
import numpy as np
from django.test import SimpleTestCase, override_settings

from core.exceptions import ConfigurationError
from core.types import GridSpec
from epidemic.params import SisParams
from scenario.runner import (
    alpha_range,
    analyze_scenario,
    parse_alpha_range,
    run_scenario,
    sweep,
)
from scenario.scenarios import Scenario

SIS_ENDEMIC = SisParams(0.01, 0.45, 0.01, 0.2, 0.05)


def sis_scenario(**overrides):
    """Create and return a short SIS endemic scenario."""
    fields = {
        'model': 'sis',
        'params': SIS_ENDEMIC,
        'alphas': (1.0, 0.99, 0.95, 0.9),
        'initial_state': (0.95, 0.05),
        'grid': GridSpec(step=0.1, t_end=50),
    }
    fields.update(overrides)
    return Scenario(**fields)


class AlphaRangeTests(SimpleTestCase):
    """Test alpha range parsing."""

    def test_inclusive_end(self):
        """Test the end point is included despite rounding."""
        self.assertEqual(parse_alpha_range('0.90:1.00:0.05'), (0.9, 0.95, 1.0))

    def test_single_point(self):
        """Test START:END with equal bounds gives one order."""
        self.assertEqual(parse_alpha_range('0.5:0.5'), (0.5,))
        self.assertEqual(alpha_range(0.7, 0.7, 0.1), (0.7,))

    def test_two_part_range_gives_endpoints(self):
        """Test START:END without a step yields both bounds."""
        self.assertEqual(parse_alpha_range('0.9:1'), (0.9, 1.0))

    def test_invalid_ranges(self):
        """Test reversed, out-of-range and malformed specs are configuration errors."""
        for spec in ('0.5:0.4', '0:1:0.5', '0.5:1.2:0.1', '0.5:1:0', '0.5:1:-0.1', 'a:b', '0.5'):
            with self.subTest(spec=spec):
                with self.assertRaises(ConfigurationError):
                    parse_alpha_range(spec)


class RunScenarioTests(SimpleTestCase):
    """Test run_scenario and analyze_scenario."""

    def test_one_run_per_alpha_in_order(self):
        """Test results come back in the scenario's alpha order."""
        runs = run_scenario(sis_scenario(), workers=4)

        self.assertEqual([run.alpha for run in runs], [1.0, 0.99, 0.95, 0.9])
        self.assertEqual(runs[0].labels, ('Q_S', 'Q_I'))
        self.assertEqual(runs[0].trajectory.states.shape, (501, 2))

    def test_parallel_matches_serial(self):
        """Test parallel runs are bitwise identical to serial ones."""
        serial = run_scenario(sis_scenario(), workers=1)
        parallel = run_scenario(sis_scenario(), workers=4)
        for first, second in zip(serial, parallel):
            np.testing.assert_array_equal(first.trajectory.states, second.trajectory.states)

    @override_settings(FRACDYN={'WORKERS': 1, 'MAX_CORRECTOR_ITERATIONS': 10})
    def test_default_workers_from_settings(self):
        """Test the worker count falls back to settings."""
        runs = run_scenario(sis_scenario(alphas=(0.9,)))
        self.assertEqual(len(runs), 1)

    def test_runs_differ_by_alpha(self):
        """Test each run uses its own fractional order."""
        runs = run_scenario(sis_scenario(alphas=(1.0, 0.9)), workers=2)
        self.assertFalse(np.allclose(runs[0].trajectory.states, runs[1].trajectory.states))

    def test_analyze(self):
        """Test one report per alpha."""
        reports = analyze_scenario(sis_scenario())
        self.assertEqual([report.alpha.alpha for report in reports], [1.0, 0.99, 0.95, 0.9])
        self.assertTrue(all(report.predicted.kind == 'endemic' for report in reports))


class SweepTests(SimpleTestCase):
    """Test sweep."""

    def test_rows(self):
        """Test one summary row per alpha with a stable verdict."""
        rows = sweep(sis_scenario(), parse_alpha_range('0.90:1.00:0.05'), workers=2)

        self.assertEqual([row.alpha for row in rows], [0.9, 0.95, 1.0])
        for row in rows:
            self.assertEqual(row.verdict, 'LocallyAsymptoticallyStable')
            self.assertGreater(row.margin, 0)
            self.assertEqual(len(row.final_state), 2)
            self.assertGreaterEqual(row.distance, 0)

    def test_distance_shrinks_with_horizon(self):
        """Test the distance to the predicted point falls as the horizon grows."""
        short = sweep(sis_scenario(grid=GridSpec(step=0.1, t_end=20)), (1.0,), workers=1)
        long = sweep(sis_scenario(grid=GridSpec(step=0.1, t_end=200)), (1.0,), workers=1)
        self.assertLess(long[0].distance, short[0].distance)
