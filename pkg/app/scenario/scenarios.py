"""
Scenario records and loading from JSON files.
"""
from dataclasses import dataclass, replace

from core.exceptions import ConfigurationError
from core.types import GridSpec

OUTPUT_KINDS = ('csv', 'svg', 'report')


@dataclass(frozen=True)
class Scenario:
    """One model, one rate set, several fractional orders."""
    model: str
    params: object  # SisParams or SirsParams at alpha = 1; runs rebind alpha
    alphas: tuple
    initial_state: tuple
    grid: GridSpec
    corrector_iterations: int = 1
    clamp_nonnegative: bool = False
    outputs: tuple = ('csv',)

    def params_for(self, alpha):
        return self.params.with_alpha(alpha)

    def with_overrides(self, step=None, t_end=None, clamp=None, outputs=None):
        """Copy with command-line overrides applied."""
        changes = {}
        if step is not None or t_end is not None:
            try:
                changes['grid'] = GridSpec(
                    step=self.grid.step if step is None else step,
                    t_end=self.grid.t_end if t_end is None else t_end,
                )
            except ValueError as exc:
                raise ConfigurationError(f'grid: {exc}')
        if clamp is not None:
            changes['clamp_nonnegative'] = clamp
        if outputs:
            changes['outputs'] = tuple(outputs)
        return replace(self, **changes) if changes else self
