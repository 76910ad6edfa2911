"""
Fixed-step integrators for D^alpha y(t) = f(t, y), 0 < alpha <= 1.
"""
import logging
from dataclasses import dataclass

import numpy as np
from django.conf import settings

from core.exceptions import DimensionError, DomainError, NumericalFailure
from core.types import FractionalOrder, GridSpec
from solver.special import gamma_fn
from solver.weights import corrector_weight_table, predictor_weight_table

logger = logging.getLogger(__name__)


class VectorField:
    """
    Right-hand side of a system of dimension `dimension`.

    Subclasses implement `__call__(t, y)` returning an array of the same
    dimension. Evaluation must be deterministic and free of side effects.
    """
    dimension = None
    labels = ()

    def __call__(self, t, y):
        raise NotImplementedError


class FunctionField(VectorField):
    """Adapts a plain callable f(t, y) to the VectorField contract."""

    def __init__(self, func, dimension, labels=()):
        if int(dimension) < 1:
            raise DimensionError(f'Field dimension must be at least 1, got {dimension}.')
        self.func = func
        self.dimension = int(dimension)
        self.labels = tuple(labels)

    def __call__(self, t, y):
        return np.asarray(self.func(t, y), dtype=float)


@dataclass(frozen=True)
class Trajectory:
    """Solution samples on a uniform grid; row 0 is the initial condition."""
    times: np.ndarray
    states: np.ndarray
    alpha: FractionalOrder
    grid: GridSpec

    def __post_init__(self):
        self.times.setflags(write=False)
        self.states.setflags(write=False)

    @property
    def dimension(self):
        return self.states.shape[1]

    @property
    def final_state(self):
        return self.states[-1]

    def column(self, index):
        return self.states[:, index]

    def as_table(self):
        """times and states side by side, one row per grid point."""
        return np.column_stack([self.times, self.states])


def _max_corrector_iterations():
    return settings.FRACDYN['MAX_CORRECTOR_ITERATIONS']


def _initial_state(field, y0):
    state = np.array(y0, dtype=float).reshape(-1)
    if field.dimension is not None and state.size != field.dimension:
        raise DimensionError(
            f'Initial state has dimension {state.size}, field expects {field.dimension}.'
        )
    if not np.all(np.isfinite(state)):
        raise DomainError('Initial state must be finite.')
    return state


def _evaluate(field, t, y):
    value = np.asarray(field(t, y), dtype=float).reshape(-1)
    if value.size != y.size:
        raise DimensionError(
            f'Field returned dimension {value.size}, state has dimension {y.size}.'
        )
    return value


def _check_finite(y, step, alpha):
    if not np.all(np.isfinite(y)):
        raise NumericalFailure(step, alpha)


def pece_solve(field, alpha, y0, grid, corrector_iterations=1, clamp_nonnegative=False):
    """
    Solve D^alpha y = f(t, y), y(0) = y0 with the fractional
    Adams-Bashforth-Moulton predictor-corrector.

    The whole history enters every step; f(t_j, y_j) is cached so each step
    costs two dot products against the weight tables.
    """
    order = FractionalOrder.coerce(alpha)
    a = order.alpha
    iterations = int(corrector_iterations)
    if not 1 <= iterations <= _max_corrector_iterations():
        raise DomainError(
            f'corrector_iterations must lie in 1..{_max_corrector_iterations()}, '
            f'got {corrector_iterations!r}.'
        )
    y0 = _initial_state(field, y0)
    n_steps, h = grid.n_steps, grid.step
    times = grid.times()
    logger.debug('pece_solve alpha=%g h=%g n_steps=%d dim=%d', a, h, n_steps, y0.size)

    states = np.empty((n_steps + 1, y0.size))
    rhs = np.empty_like(states)
    states[0] = y0
    rhs[0] = _evaluate(field, times[0], y0)

    # reversed so that the weights for step n are the contiguous tail
    predictor = predictor_weight_table(a, h, n_steps)[::-1].copy()
    corrector = corrector_weight_table(a, h, n_steps)
    interior = corrector.interior[::-1].copy()
    scale = 1.0 / gamma_fn(a)

    with np.errstate(over='ignore', invalid='ignore'):
        for n in range(n_steps):
            offset = n_steps - 1 - n
            t_next = times[n + 1]
            history_c = corrector.start[n] * rhs[0] + interior[offset:] @ rhs[1:n + 1]
            y = y0 + scale * (predictor[offset:] @ rhs[:n + 1])
            for _ in range(iterations):
                y = y0 + scale * (history_c + corrector.last * _evaluate(field, t_next, y))
                if clamp_nonnegative:
                    y = np.maximum(y, 0.0)
                _check_finite(y, n + 1, a)
            states[n + 1] = y
            rhs[n + 1] = _evaluate(field, t_next, y)

    return Trajectory(times=times, states=states, alpha=order, grid=grid)


def rk4_solve(field, y0, grid, clamp_nonnegative=False):
    """Classical fourth-order Runge-Kutta on the same grid (alpha = 1)."""
    y0 = _initial_state(field, y0)
    n_steps, h = grid.n_steps, grid.step
    times = grid.times()
    logger.debug('rk4_solve h=%g n_steps=%d dim=%d', h, n_steps, y0.size)

    states = np.empty((n_steps + 1, y0.size))
    states[0] = y0
    y = y0
    with np.errstate(over='ignore', invalid='ignore'):
        for n in range(n_steps):
            t = times[n]
            k1 = _evaluate(field, t, y)
            k2 = _evaluate(field, t + h / 2, y + h / 2 * k1)
            k3 = _evaluate(field, t + h / 2, y + h / 2 * k2)
            k4 = _evaluate(field, t + h, y + h * k3)
            y = y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
            if clamp_nonnegative:
                y = np.maximum(y, 0.0)
            _check_finite(y, n + 1, 1.0)
            states[n + 1] = y

    return Trajectory(times=times, states=states, alpha=FractionalOrder(1.0), grid=grid)
