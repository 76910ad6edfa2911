"""
Analytic Jacobians of the fractional SIS and SIRS fields.
"""
import numpy as np

from core.exceptions import DomainError
from epidemic.fields import EMPTY_POPULATION
from epidemic.params import SirsState, SisState


def _check_population(total):
    if total <= EMPTY_POPULATION:
        raise DomainError(
            f'Jacobian is undefined for total population {total!r} <= {EMPTY_POPULATION:g}.'
        )


def sis_jacobian(params, point):
    rates = params.effective()
    state = SisState.coerce(point)
    s, i = state.susceptible, state.infected
    total = s + i
    _check_population(total)
    phi = rates['infection']
    d_susceptible = phi * i * i / total ** 2
    d_infected = phi * s * s / total ** 2
    outflow = rates['disease_death'] + rates['natural_death'] + rates['return_rate']
    return np.array([
        [-d_susceptible - rates['natural_death'], -d_infected + rates['return_rate']],
        [d_susceptible, d_infected - outflow],
    ])


def sirs_jacobian(params, point):
    rates = params.effective()
    state = SirsState.coerce(point)
    s, i, r = state.susceptible, state.infected, state.recovered
    total = s + i + r
    _check_population(total)
    phi = rates['infection']
    nu, kappa, gamma = rates['natural_death'], rates['recovery'], rates['immunity_loss']
    d_susceptible = phi * i * (i + r) / total ** 2
    d_infected = phi * s * (s + r) / total ** 2
    d_recovered = -phi * s * i / total ** 2
    outflow = rates['disease_death'] + kappa + nu
    return np.array([
        [-d_susceptible - nu, -d_infected, -d_recovered + gamma],
        [d_susceptible, d_infected - outflow, d_recovered],
        [0.0, kappa, -(nu + gamma)],
    ])


def printed_sirs_coefficients(params, point):
    """w1, w2, w3 as expanded term by term under the SIRS characteristic equation."""
    rates = params.effective()
    s, i, r = SirsState.coerce(point).as_vector()
    total = s + i + r
    _check_population(total)
    phi = rates['infection']
    nu, kappa, gamma = rates['natural_death'], rates['recovery'], rates['immunity_loss']
    n2, n4 = total ** 2, total ** 4
    from_s = phi * i * (i + r) / n2
    cross = phi * s * i / n2
    quartic = phi ** 2 * s * i * (i + r) * (s + r) / n4
    quartic_i = phi ** 2 * s * i ** 2 * (i + r) / n4

    w1 = from_s + cross + 2 * nu + gamma
    w2 = (
        quartic + quartic_i + kappa * cross + nu * from_s + 2 * nu * cross
        + gamma * from_s + gamma * cross + nu * gamma + nu ** 2
    )
    w3 = (
        nu * quartic + nu * quartic_i + gamma * quartic + gamma * quartic_i
        + kappa * nu * cross + gamma * nu * cross - kappa * gamma * from_s
        + nu ** 2 * cross
    )
    return (float(w1), float(w2), float(w3))
