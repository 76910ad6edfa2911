"""
Registry of the simulated models.
"""
from dataclasses import dataclass

from core.exceptions import ConfigurationError
from epidemic.fields import (
    SIRS_LABELS,
    SIS_LABELS,
    SirsField,
    SisField,
    SisLegacyField,
)
from epidemic.params import SirsParams, SisParams


@dataclass(frozen=True)
class ModelSpec:
    name: str
    params_class: type
    field_class: type
    labels: tuple
    analysis: str  # stability analysis family: sis or sirs

    @property
    def dimension(self):
        return len(self.labels)

    def field(self, params):
        return self.field_class(params)


MODELS = {
    'sis': ModelSpec('sis', SisParams, SisField, SIS_LABELS, 'sis'),
    'sirs': ModelSpec('sirs', SirsParams, SirsField, SIRS_LABELS, 'sirs'),
    'sis-legacy': ModelSpec('sis-legacy', SisParams, SisLegacyField, SIS_LABELS, 'sis'),
}


def get_model(name):
    try:
        return MODELS[name]
    except KeyError:
        raise ConfigurationError(
            f'Unknown model {name!r}; expected one of {", ".join(sorted(MODELS))}.'
        )
