"""
Parameter and state records for the fractional SIS and SIRS models.
"""
import math
from dataclasses import dataclass, field, fields

import numpy as np

from core.exceptions import DimensionError, DomainError
from core.types import FractionalOrder


def effective_rate(p, alpha):
    """Fractionalized rate p^alpha, carrying time dimension (time)^-alpha."""
    order = FractionalOrder.coerce(alpha).alpha
    p = float(p)
    if not math.isfinite(p) or p <= 0.0:
        raise DomainError(f'Rates must be positive, got {p!r}.')
    return p ** order


class RateParams:
    """Shared validation and fractionalization for rate records."""
    rate_names = ()

    def __post_init__(self):
        for name in self.rate_names:
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise DomainError(f'{name} must be a number, got {value!r}.')
            if not math.isfinite(value) or value <= 0.0:
                raise DomainError(f'{name} must be positive, got {value!r}.')
            object.__setattr__(self, name, value)
        object.__setattr__(self, 'alpha', FractionalOrder.coerce(self.alpha))

    def effective(self):
        """Rates raised to alpha, keyed by rate name."""
        return {name: effective_rate(getattr(self, name), self.alpha) for name in self.rate_names}

    def raw(self):
        return {name: getattr(self, name) for name in self.rate_names}

    def with_alpha(self, alpha):
        values = self.raw()
        return type(self)(alpha=FractionalOrder.coerce(alpha), **values)


@dataclass(frozen=True)
class SisParams(RateParams):
    """Rates of the SIS model: recruitment, infection, deaths, return to S."""
    recruitment: float
    infection: float
    natural_death: float
    return_rate: float
    disease_death: float
    alpha: FractionalOrder = field(default=FractionalOrder(1.0))

    rate_names = (
        'recruitment', 'infection', 'natural_death', 'return_rate', 'disease_death',
    )


@dataclass(frozen=True)
class SirsParams(RateParams):
    """Rates of the SIRS model; recovery feeds R, immunity_loss returns R to S."""
    recruitment: float
    infection: float
    natural_death: float
    recovery: float
    disease_death: float
    immunity_loss: float
    alpha: FractionalOrder = field(default=FractionalOrder(1.0))

    rate_names = (
        'recruitment', 'infection', 'natural_death', 'recovery', 'disease_death',
        'immunity_loss',
    )


class CompartmentState:
    """Non-negative, finite compartment sizes."""

    def __post_init__(self):
        for item in fields(self):
            value = float(getattr(self, item.name))
            if not math.isfinite(value) or value < 0.0:
                raise DomainError(
                    f'{item.name} must be finite and non-negative, got {value!r}.'
                )
            object.__setattr__(self, item.name, value)

    @classmethod
    def from_vector(cls, vector):
        values = np.asarray(vector, dtype=float).reshape(-1)
        if values.size != len(fields(cls)):
            raise DimensionError(
                f'{cls.__name__} needs {len(fields(cls))} components, got {values.size}.'
            )
        return cls(*values)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        return cls.from_vector(value)

    def as_vector(self):
        return np.array([getattr(self, item.name) for item in fields(self)])

    @property
    def total(self):
        return float(sum(getattr(self, item.name) for item in fields(self)))


@dataclass(frozen=True)
class SisState(CompartmentState):
    susceptible: float
    infected: float


@dataclass(frozen=True)
class SirsState(CompartmentState):
    susceptible: float
    infected: float
    recovered: float
