"""
Right-hand sides of the fractional SIS and SIRS models.

All fields use standard incidence phi * S * I / N. Below N <= 1e-12 the
incidence is taken as zero (an empty population produces no infections).
States are not clamped here; overshoot below zero is left to the caller.
"""
import numpy as np

from core.exceptions import DomainError
from epidemic.params import SirsParams, SirsState, SisParams, SisState
from solver.integrators import VectorField

EMPTY_POPULATION = 1e-12

SIS_LABELS = ('Q_S', 'Q_I')
SIRS_LABELS = ('Q_S', 'Q_I', 'Q_R')


def incidence(infection, susceptible, infected, total):
    if total <= EMPTY_POPULATION:
        return 0.0
    return infection * susceptible * infected / total


def _sis_components(s, i, recruitment, infection, natural_death, return_rate, disease_death):
    new_infections = incidence(infection, s, i, s + i)
    return np.array([
        recruitment - new_infections - natural_death * s + return_rate * i,
        new_infections - (disease_death + natural_death + return_rate) * i,
    ])


def _sirs_components(s, i, r, recruitment, infection, natural_death, recovery,
                     disease_death, immunity_loss):
    new_infections = incidence(infection, s, i, s + i + r)
    return np.array([
        recruitment - new_infections - natural_death * s + immunity_loss * r,
        new_infections - (disease_death + recovery + natural_death) * i,
        recovery * i - (natural_death + immunity_loss) * r,
    ])


def sis_rhs(state, params):
    """Fractional SIS field with every rate raised to alpha."""
    state = SisState.coerce(state)
    return _sis_components(state.susceptible, state.infected, **params.effective())


def sis_rhs_legacy(state, params):
    """SIS field with raw rates; its time dimension does not match D^alpha."""
    state = SisState.coerce(state)
    return _sis_components(state.susceptible, state.infected, **params.raw())


def sirs_rhs(state, params):
    """Fractional SIRS field with every rate raised to alpha."""
    state = SirsState.coerce(state)
    return _sirs_components(
        state.susceptible, state.infected, state.recovered, **params.effective()
    )


def sirs_rhs_integer(state, params):
    """Integer-order SIRS field (raw rates), the alpha = 1 model."""
    state = SirsState.coerce(state)
    return _sirs_components(
        state.susceptible, state.infected, state.recovered, **params.raw()
    )


def total_population_rate(state, params):
    """D^alpha N = Lambda^a - (disease death)^a Q_I - nu^a N."""
    if isinstance(params, SisParams):
        state = SisState.coerce(state)
    elif isinstance(params, SirsParams):
        state = SirsState.coerce(state)
    else:
        raise DomainError(f'Unsupported parameter record {type(params).__name__}.')
    rates = params.effective()
    return (
        rates['recruitment']
        - rates['disease_death'] * state.infected
        - rates['natural_death'] * state.total
    )


class SisField(VectorField):
    """Fractional SIS field bound to one parameter set, for the solver."""
    dimension = 2
    labels = SIS_LABELS

    def __init__(self, params):
        self.params = params
        self._rates = params.effective()

    def __call__(self, t, y):
        return _sis_components(y[0], y[1], **self._rates)


class SisLegacyField(SisField):
    """SIS field with raw rates."""

    def __init__(self, params):
        self.params = params
        self._rates = params.raw()


class SirsField(VectorField):
    """Fractional SIRS field bound to one parameter set, for the solver."""
    dimension = 3
    labels = SIRS_LABELS

    def __init__(self, params):
        self.params = params
        self._rates = params.effective()

    def __call__(self, t, y):
        return _sirs_components(y[0], y[1], y[2], **self._rates)
