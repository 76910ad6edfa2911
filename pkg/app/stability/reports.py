"""
Stability report: equilibria, Jacobians, spectra and verdicts for one model.
"""
import logging
from dataclasses import dataclass, replace

import numpy as np

from core.exceptions import ConfigurationError
from core.types import FractionalOrder
from epidemic.registry import get_model
from stability.equilibria import endemic_identities, sirs_equilibria, sis_equilibria
from stability.jacobians import printed_sirs_coefficients, sirs_jacobian, sis_jacobian
from stability.polynomials import char_poly, eigenvalues
from stability.verdicts import (
    classify_endemic_sirs,
    disease_free_subsystem_check,
    matignon_check,
    routh_hurwitz_verdict,
    threshold_verdict,
)

logger = logging.getLogger(__name__)

PRINTED_COEFFICIENT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class EquilibriumAnalysis:
    kind: str
    point: tuple
    residual: float
    jacobian: np.ndarray
    char_poly: object
    eigen: object
    matignon: object
    routes: dict

    @property
    def agreement(self):
        """No definite route contradicts a definite eigenvalue verdict."""
        if not self.matignon.is_definite:
            return True
        return all(
            verdict.classification is self.matignon.classification
            for verdict in self.routes.values()
            if verdict.is_definite
        )

    @property
    def verdict(self):
        if self.matignon.is_definite:
            return self.matignon
        for verdict in self.routes.values():
            if verdict.is_definite:
                return verdict
        return self.matignon


@dataclass(frozen=True)
class StabilityReport:
    model: str
    alpha: FractionalOrder
    r0: float
    equilibria: object
    analyses: tuple
    identities: dict
    diagnostics: tuple

    def analysis(self, kind):
        for item in self.analyses:
            if item.kind == kind:
                return item
        return None

    @property
    def predicted(self):
        return predicted_equilibrium(self)


def predicted_equilibrium(report):
    """The endemic analysis when it exists and is stable, else the disease-free one."""
    endemic = report.analysis('endemic')
    if endemic is not None and endemic.verdict.is_stable:
        return endemic
    return report.analysis('disease_free')


def _analyse(kind, point, residual, jacobian, alpha, routes):
    poly = char_poly(jacobian)
    eigs = eigenvalues(poly)
    return EquilibriumAnalysis(
        kind=kind,
        point=tuple(float(x) for x in point),
        residual=residual,
        jacobian=jacobian,
        char_poly=poly,
        eigen=eigs,
        matignon=matignon_check(eigs, alpha),
        routes=routes(poly),
    )


def _sis_report(params, alpha):
    equilibria = sis_equilibria(params)
    analyses = [
        _analyse(
            'disease_free', equilibria.disease_free, equilibria.residuals['disease_free'],
            sis_jacobian(params, equilibria.disease_free), alpha,
            lambda poly: {'threshold-r0': threshold_verdict(equilibria.r0, 'threshold-r0')},
        )
    ]
    identities = {}
    diagnostics = []
    if equilibria.has_endemic:
        analyses.append(_analyse(
            'endemic', equilibria.endemic, equilibria.residuals['endemic'],
            sis_jacobian(params, equilibria.endemic), alpha,
            lambda poly: {'RH-quadratic': routh_hurwitz_verdict(poly, alpha)},
        ))
        identities = endemic_identities(params, equilibria.endemic)
        if abs(identities['population_balance_as_printed']) > PRINTED_COEFFICIENT_TOLERANCE:
            diagnostics.append(
                'printed endemic population identity uses nu*Q_I; residual '
                f'{identities["population_balance_as_printed"]:.3e} (checked with nu*Q_S instead)'
            )
    return equilibria, analyses, identities, diagnostics


def _sirs_report(params, alpha):
    equilibria = sirs_equilibria(params)
    disease_free_jacobian = sirs_jacobian(params, equilibria.disease_free)
    analyses = [
        _analyse(
            'disease_free', equilibria.disease_free, equilibria.residuals['disease_free'],
            disease_free_jacobian, alpha,
            lambda poly: {
                'threshold-r0': threshold_verdict(equilibria.r0, 'threshold-r0'),
                'RH-subsystem': disease_free_subsystem_check(disease_free_jacobian, alpha),
            },
        )
    ]
    diagnostics = []
    if equilibria.has_endemic:
        endemic = _analyse(
            'endemic', equilibria.endemic, equilibria.residuals['endemic'],
            sirs_jacobian(params, equilibria.endemic), alpha,
            lambda poly: {'discriminant-cases': classify_endemic_sirs(poly, alpha)},
        )
        analyses.append(endemic)
        printed = printed_sirs_coefficients(params, equilibria.endemic)
        for name, computed, expanded in zip(('w1', 'w2', 'w3'), endemic.char_poly.coefficients, printed):
            scale = max(abs(computed), abs(expanded), 1e-300)
            if abs(computed - expanded) > PRINTED_COEFFICIENT_TOLERANCE * scale:
                diagnostics.append(
                    f'{name}: Jacobian gives {computed:.10g}, printed expansion gives {expanded:.10g}'
                )
    return equilibria, analyses, {}, diagnostics


def stability_report(model, params):
    """
    Full local analysis for `model` in {sis, sis-legacy, sirs}.

    The sis-legacy field has the SIS structure with raw rates, so its
    algebra is the alpha = 1 SIS algebra while the sector test keeps the
    scenario's alpha.
    """
    spec = get_model(model)
    alpha = params.alpha
    if not isinstance(params, spec.params_class):
        raise ConfigurationError(
            f'Model {model!r} needs {spec.params_class.__name__}, got {type(params).__name__}.'
        )
    algebra_params = params
    if spec.name == 'sis-legacy':
        algebra_params = replace(params, alpha=FractionalOrder(1.0))

    build = _sis_report if spec.analysis == 'sis' else _sirs_report
    equilibria, analyses, identities, diagnostics = build(algebra_params, alpha)
    report = StabilityReport(
        model=spec.name,
        alpha=alpha,
        r0=equilibria.r0,
        equilibria=equilibria,
        analyses=tuple(analyses),
        identities=identities,
        diagnostics=tuple(diagnostics),
    )
    predicted = report.predicted
    logger.info(
        'stability_report model=%s alpha=%g r0=%.7g predicted=%s verdict=%s',
        spec.name, alpha.alpha, report.r0, predicted.kind,
        predicted.verdict.classification.value,
    )
    return report

