"""
Value types shared by the solver, the models and the analysis.
"""
import math
from dataclasses import dataclass

import numpy as np

from core.exceptions import DomainError

# Guards the floor(t_end / step) truncation against representation error.
GRID_ROUNDING = 1e-9


@dataclass(frozen=True)
class FractionalOrder:
    """Order alpha of the Caputo derivative, 0 < alpha <= 1."""
    alpha: float

    def __post_init__(self):
        try:
            alpha = float(self.alpha)
        except (TypeError, ValueError):
            raise DomainError(f'Fractional order must be a number, got {self.alpha!r}.')
        if not math.isfinite(alpha) or not 0.0 < alpha <= 1.0:
            raise DomainError(f'Fractional order must lie in (0, 1], got {self.alpha!r}.')
        object.__setattr__(self, 'alpha', alpha)

    def __float__(self):
        return self.alpha

    @classmethod
    def coerce(cls, value):
        """Return value as a FractionalOrder."""
        if isinstance(value, cls):
            return value
        return cls(value)


@dataclass(frozen=True)
class GridSpec:
    """Uniform time grid t_k = k * step, k = 0..n_steps."""
    step: float
    t_end: float

    def __post_init__(self):
        step, t_end = float(self.step), float(self.t_end)
        if not math.isfinite(step) or step <= 0:
            raise DomainError(f'Grid step must be positive, got {self.step!r}.')
        if not math.isfinite(t_end) or t_end < step:
            raise DomainError(
                f'Grid t_end must be at least one step ({step:g}), got {self.t_end!r}.'
            )
        object.__setattr__(self, 'step', step)
        object.__setattr__(self, 't_end', t_end)

    @property
    def n_steps(self):
        return max(1, int(math.floor(self.t_end / self.step + GRID_ROUNDING)))

    @property
    def horizon(self):
        """Last grid time; t_end truncated down to a multiple of step."""
        return self.n_steps * self.step

    def times(self):
        return np.arange(self.n_steps + 1, dtype=float) * self.step
