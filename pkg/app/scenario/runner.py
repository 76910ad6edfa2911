"""
Orchestration of scenario runs across fractional orders.

Runs for different alpha values are independent and may execute on a
thread pool; results always come back in the scenario's alpha order.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np
from django.conf import settings

from core.exceptions import ConfigurationError
from epidemic.registry import get_model
from solver.integrators import pece_solve
from stability.reports import stability_report

logger = logging.getLogger(__name__)

# Tolerance when counting sweep points, so 0.90:1.00:0.05 includes 1.00.
SWEEP_ROUNDING = 1e-9


@dataclass(frozen=True)
class RunResult:
    alpha: float
    trajectory: object
    labels: tuple


@dataclass(frozen=True)
class SweepRow:
    alpha: float
    final_state: tuple
    distance: float
    verdict: str
    margin: float


def _map_ordered(func, items, workers):
    workers = settings.FRACDYN['WORKERS'] if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))


def simulate_alpha(scenario, alpha):
    spec = get_model(scenario.model)
    params = scenario.params_for(alpha)
    logger.info(
        'simulating model=%s alpha=%g h=%g n_steps=%d',
        spec.name, alpha, scenario.grid.step, scenario.grid.n_steps,
    )
    trajectory = pece_solve(
        spec.field(params),
        params.alpha,
        scenario.initial_state,
        scenario.grid,
        corrector_iterations=scenario.corrector_iterations,
        clamp_nonnegative=scenario.clamp_nonnegative,
    )
    return RunResult(alpha=alpha, trajectory=trajectory, labels=spec.labels)


def run_scenario(scenario, workers=None):
    return _map_ordered(lambda alpha: simulate_alpha(scenario, alpha), list(scenario.alphas), workers)


def analyze_scenario(scenario):
    return [
        stability_report(scenario.model, scenario.params_for(alpha))
        for alpha in scenario.alphas
    ]


def parse_alpha_range(spec):
    """'START:END:STEP' -> tuple of alphas; 'START:END' gives just the two endpoints."""
    parts = str(spec).split(':')
    if len(parts) not in (2, 3):
        raise ConfigurationError(f'alpha range {spec!r} must look like START:END:STEP.')
    try:
        start, end = float(parts[0]), float(parts[1])
        step = float(parts[2]) if len(parts) == 3 else (end - start) or 1.0
    except ValueError:
        raise ConfigurationError(f'alpha range {spec!r} must contain numbers.')
    return alpha_range(start, end, step)


def alpha_range(start, end, step):
    if not all(math.isfinite(x) for x in (start, end, step)):
        raise ConfigurationError('alpha range bounds must be finite.')
    if start > end:
        raise ConfigurationError(f'alpha range start {start:g} exceeds end {end:g}.')
    if step <= 0:
        raise ConfigurationError(f'alpha range step must be positive, got {step:g}.')
    if not (0 < start <= 1 and 0 < end <= 1):
        raise ConfigurationError('alpha range must lie within (0, 1].')
    count = int(math.floor((end - start) / step + SWEEP_ROUNDING)) + 1
    return tuple(round(start + k * step, 12) for k in range(count))


def sweep(scenario, alphas, workers=None):
    """Simulate and analyse the scenario at each alpha; one summary row per alpha."""
    swept = replace(scenario, alphas=tuple(alphas))
    runs = run_scenario(swept, workers)
    rows = []
    for run, report in zip(runs, analyze_scenario(swept)):
        predicted = report.predicted
        final = run.trajectory.final_state
        verdict = predicted.verdict
        rows.append(SweepRow(
            alpha=run.alpha,
            final_state=tuple(float(x) for x in final),
            distance=float(np.max(np.abs(final - np.asarray(predicted.point)))),
            verdict=verdict.classification.value,
            margin=predicted.matignon.margin,
        ))
    return rows
