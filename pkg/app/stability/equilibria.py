"""
Basic reproduction numbers and equilibria of the fractional models.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from epidemic.fields import sirs_rhs, sis_rhs

# Endemic point exists only above this R0; the closed forms degenerate at 1.
ENDEMIC_THRESHOLD = 1.0 + 1e-12


@dataclass(frozen=True)
class EquilibriumSet:
    """Disease-free point, endemic point when R0 > 1, and R0."""
    disease_free: tuple
    endemic: Optional[tuple]
    r0: float
    residuals: dict

    @property
    def has_endemic(self):
        return self.endemic is not None


def sis_r0(params):
    rates = params.effective()
    return rates['infection'] / (
        rates['disease_death'] + rates['natural_death'] + rates['return_rate']
    )


def sirs_r0(params):
    rates = params.effective()
    return rates['infection'] / (
        rates['disease_death'] + rates['recovery'] + rates['natural_death']
    )


def _residual(rhs, point, params):
    return float(np.linalg.norm(rhs(point, params)))


def sis_equilibria(params):
    rates = params.effective()
    r0 = sis_r0(params)
    recruitment, natural_death = rates['recruitment'], rates['natural_death']
    disease_free = (recruitment / natural_death, 0.0)
    residuals = {'disease_free': _residual(sis_rhs, disease_free, params)}

    endemic = None
    if r0 > ENDEMIC_THRESHOLD:
        excess = r0 - 1.0
        denominator = natural_death + (rates['disease_death'] + natural_death) * excess
        endemic = (recruitment / denominator, excess * recruitment / denominator)
        residuals['endemic'] = _residual(sis_rhs, endemic, params)
    return EquilibriumSet(disease_free, endemic, r0, residuals)


def sirs_equilibria(params):
    rates = params.effective()
    r0 = sirs_r0(params)
    recruitment, natural_death = rates['recruitment'], rates['natural_death']
    recovery, immunity_loss = rates['recovery'], rates['immunity_loss']
    disease_free = (recruitment / natural_death, 0.0, 0.0)
    residuals = {'disease_free': _residual(sirs_rhs, disease_free, params)}

    endemic = None
    if r0 > ENDEMIC_THRESHOLD:
        excess = r0 - 1.0
        outflow_r = immunity_loss + natural_death
        outflow_all = immunity_loss + recovery + natural_death
        denominator = (
            rates['disease_death'] * outflow_r * excess + natural_death * outflow_all * r0
        )
        endemic = (
            recruitment * outflow_all / denominator,
            recruitment * outflow_r * excess / denominator,
            recruitment * recovery * excess / denominator,
        )
        residuals['endemic'] = _residual(sirs_rhs, endemic, params)
    return EquilibriumSet(disease_free, endemic, r0, residuals)


def endemic_identities(params, point):
    """
    Residuals of the two SIS endemic identities:

        phi^a S* / (S* + I*) = eta^a + nu^a + omega^a
        Lambda^a = (eta^a + nu^a) I* + nu^a S*

    The second is printed with nu^a I* in the last term, which does not
    hold at the endemic point; the S* form is the one checked here.
    """
    rates = params.effective()
    susceptible, infected = point
    outflow = rates['disease_death'] + rates['natural_death'] + rates['return_rate']
    force = rates['infection'] * susceptible / (susceptible + infected) - outflow
    balance = rates['recruitment'] - (
        (rates['disease_death'] + rates['natural_death']) * infected
        + rates['natural_death'] * susceptible
    )
    printed = rates['recruitment'] - (
        (rates['disease_death'] + rates['natural_death']) * infected
        + rates['natural_death'] * infected
    )
    return {
        'force_of_infection': float(force),
        'population_balance': float(balance),
        'population_balance_as_printed': float(printed),
    }
