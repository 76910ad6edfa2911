"""
Scenario presets reproducing the published figure set.

Rates and initial conditions are the published ones; step and horizon are
not published and come from settings.FRACDYN.
"""
from dataclasses import dataclass
from typing import Optional

from django.conf import settings

from core.exceptions import ConfigurationError
from core.types import GridSpec
from epidemic.params import SirsParams, SisParams
from scenario.scenarios import Scenario

FIGURE_ALPHAS = (1.0, 0.99, 0.95, 0.90)

SIS_DISEASE_FREE = SisParams(
    recruitment=0.01, infection=0.06, natural_death=0.01, return_rate=0.02, disease_death=0.2,
)
SIS_ENDEMIC = SisParams(
    recruitment=0.01, infection=0.45, natural_death=0.01, return_rate=0.2, disease_death=0.05,
)
SIRS_DISEASE_FREE = SirsParams(
    recruitment=0.01, infection=0.06, natural_death=0.01, recovery=0.3, disease_death=0.15,
    immunity_loss=0.02,
)
SIRS_ENDEMIC = SirsParams(
    recruitment=0.01, infection=0.5, natural_death=0.01, recovery=0.2, disease_death=0.015,
    immunity_loss=0.02,
)

# figure id -> (model, params, endemic?, content, plotted component)
FIGURES = {
    'fig1': ('sis', SIS_DISEASE_FREE, False, 'timeseries', 'Q_S'),
    'fig2': ('sis', SIS_DISEASE_FREE, False, 'timeseries', 'Q_I'),
    'fig3': ('sis', SIS_DISEASE_FREE, False, 'phase', None),
    'fig4': ('sis', SIS_ENDEMIC, True, 'timeseries', 'Q_S'),
    'fig5': ('sis', SIS_ENDEMIC, True, 'timeseries', 'Q_I'),
    'fig6': ('sis', SIS_ENDEMIC, True, 'phase', None),
    'fig7': ('sirs', SIRS_DISEASE_FREE, False, 'timeseries', 'Q_S'),
    'fig8': ('sirs', SIRS_DISEASE_FREE, False, 'timeseries', 'Q_I'),
    'fig9': ('sirs', SIRS_DISEASE_FREE, False, 'timeseries', 'Q_R'),
    'fig10': ('sirs', SIRS_DISEASE_FREE, False, 'phase', None),
    'fig11': ('sirs', SIRS_ENDEMIC, True, 'timeseries', 'Q_S'),
    'fig12': ('sirs', SIRS_ENDEMIC, True, 'timeseries', 'Q_I'),
    'fig13': ('sirs', SIRS_ENDEMIC, True, 'timeseries', 'Q_R'),
    'fig14': ('sirs', SIRS_ENDEMIC, True, 'phase', None),
}

COMPARTMENT_NAMES = {'Q_S': 'susceptible', 'Q_I': 'infected', 'Q_R': 'recovered'}


@dataclass(frozen=True)
class FigurePreset:
    figure_id: str
    scenario: Scenario
    content: str  # timeseries or phase
    component: Optional[str]
    endemic: bool
    tolerance: float

    @property
    def description(self):
        target = 'endemic' if self.endemic else 'disease-free'
        model = self.scenario.model.upper()
        if self.content == 'phase':
            return f'{model} SI-plane phase portraits, {target} equilibrium'
        name = COMPARTMENT_NAMES[self.component]
        return f'{model} {name} trajectories, {target} equilibrium'


def _initial_state(model):
    return (0.95, 0.05) if model == 'sis' else (0.95, 0.05, 0.0)


def get_preset(figure_id):
    try:
        model, params, endemic, content, component = FIGURES[figure_id]
    except KeyError:
        raise ConfigurationError(
            f'Unknown figure {figure_id!r}; expected fig1 .. fig{len(FIGURES)}.'
        )
    config = settings.FRACDYN
    t_end = config['T_END_ENDEMIC'] if endemic else config['T_END_DISEASE_FREE']
    scenario = Scenario(
        model=model,
        params=params,
        alphas=FIGURE_ALPHAS,
        initial_state=_initial_state(model),
        grid=GridSpec(step=config['DEFAULT_STEP'], t_end=t_end),
        corrector_iterations=config['CORRECTOR_ITERATIONS'],
        outputs=('csv', 'svg'),
    )
    return FigurePreset(
        figure_id=figure_id,
        scenario=scenario,
        content=content,
        component=component,
        endemic=endemic,
        tolerance=config['PRESET_TOLERANCE'],
    )


def all_presets():
    return [get_preset(figure_id) for figure_id in FIGURES]
