"""
Local stability verdicts for fractional-order equilibria.

An equilibrium of D^alpha x = f(x) is locally asymptotically stable when
every eigenvalue of the Jacobian satisfies |arg(lambda)| > alpha * pi / 2.
The coefficient tests below (Routh-Hurwitz, discriminant casework) are
sufficient conditions that are reported next to the direct eigenvalue test.
"""
import enum
import math
from dataclasses import dataclass
from typing import Optional

from core.exceptions import DimensionError, DomainError
from core.types import FractionalOrder
from stability.polynomials import argument, char_poly, cubic_discriminant, eigenvalues

# w1 * w2 = w3 is tested with this relative tolerance.
PRODUCT_EQUALITY_TOLERANCE = 1e-9
TWO_THIRDS = 2.0 / 3.0


class Classification(enum.Enum):
    STABLE = 'LocallyAsymptoticallyStable'
    UNSTABLE = 'Unstable'
    INCONCLUSIVE = 'Inconclusive'


@dataclass(frozen=True)
class StabilityVerdict:
    classification: Classification
    rule_fired: str
    margin: Optional[float] = None
    discriminant: Optional[float] = None
    cross_check: Optional['StabilityVerdict'] = None

    @property
    def is_stable(self):
        return self.classification is Classification.STABLE

    @property
    def is_definite(self):
        return self.classification is not Classification.INCONCLUSIVE


def stability_margin(eigs, alpha):
    """min |arg(lambda_i)| - alpha * pi / 2."""
    order = FractionalOrder.coerce(alpha).alpha
    return min(argument(value) for value in eigs.values) - order * math.pi / 2


def matignon_check(eigs, alpha):
    if not eigs.values:
        raise DomainError('matignon_check needs at least one eigenvalue.')
    margin = stability_margin(eigs, alpha)
    if any(value == 0 for value in eigs.values):
        return StabilityVerdict(Classification.INCONCLUSIVE, 'matignon', margin)
    classification = Classification.STABLE if margin > 0 else Classification.UNSTABLE
    return StabilityVerdict(classification, 'matignon', margin)


def routh_hurwitz_quadratic(poly):
    if poly.degree != 2:
        raise DimensionError('routh_hurwitz_quadratic needs a degree-2 polynomial.')
    a1, a2 = poly.coefficients
    return a1 > 0 and a2 > 0


def routh_hurwitz_verdict(poly, alpha, rule='RH-quadratic'):
    """
    Verdict from the quadratic Routh-Hurwitz test.

    a1 > 0 and a2 > 0 puts both roots in the open left half-plane, which is
    stable for every alpha <= 1. a2 < 0 means a positive real root. Anything
    else depends on alpha and is left to the eigenvalue test.
    """
    margin = stability_margin(eigenvalues(poly), alpha)
    if routh_hurwitz_quadratic(poly):
        return StabilityVerdict(Classification.STABLE, rule, margin)
    if poly.coefficients[1] < 0:
        return StabilityVerdict(Classification.UNSTABLE, rule, margin)
    return StabilityVerdict(Classification.INCONCLUSIVE, rule, margin)


def _products_equal(w1, w2, w3):
    scale = max(abs(w1 * w2), abs(w3), 1e-300)
    return abs(w1 * w2 - w3) <= PRODUCT_EQUALITY_TOLERANCE * scale


def _discriminant_case(w1, w2, w3, discriminant, alpha):
    if discriminant > 0 and w1 > 0 and w3 > 0 and w1 * w2 > w3:
        return 'prop-i', Classification.STABLE
    if discriminant < 0 and w1 >= 0 and w2 >= 0 and w3 > 0 and alpha < TWO_THIRDS:
        return 'prop-ii', Classification.STABLE
    if discriminant < 0 and w1 < 0 and w2 < 0 and alpha > TWO_THIRDS:
        return 'prop-iii', Classification.STABLE
    if discriminant < 0 and w1 > 0 and w2 > 0 and _products_equal(w1, w2, w3):
        return 'prop-iv', Classification.STABLE
    if w3 <= 0:
        return 'prop-v-violated', Classification.UNSTABLE
    return 'none', Classification.INCONCLUSIVE


def classify_endemic_sirs(poly, alpha):
    """
    Discriminant casework for lambda^3 + w1 lambda^2 + w2 lambda + w3.

    Cases are tried in order. A case that declares stability while an
    eigenvalue sits on or outside the alpha * pi / 2 sector is downgraded to
    Inconclusive; both downgraded and unmatched verdicts carry the direct
    eigenvalue test as cross_check.
    """
    if poly.degree != 3:
        raise DimensionError('classify_endemic_sirs needs a degree-3 polynomial.')
    order = FractionalOrder.coerce(alpha).alpha
    w1, w2, w3 = poly.coefficients
    discriminant = cubic_discriminant(poly)
    eigs = eigenvalues(poly)
    margin = stability_margin(eigs, order)
    rule, classification = _discriminant_case(w1, w2, w3, discriminant, order)

    cross_check = None
    if classification is Classification.STABLE and not margin > 0:
        classification = Classification.INCONCLUSIVE
        cross_check = matignon_check(eigs, order)
    elif classification is Classification.INCONCLUSIVE:
        cross_check = matignon_check(eigs, order)
    return StabilityVerdict(classification, rule, margin, discriminant, cross_check)


def disease_free_subsystem_check(jacobian, alpha):
    """
    Routh-Hurwitz on the lower-right 2x2 block of J(P_df).

    The first column of J(P_df) is (-nu^a, 0, 0), so its spectrum is -nu^a
    plus the spectrum of that block.
    """
    block = jacobian[1:, 1:]
    verdict = routh_hurwitz_verdict(char_poly(block), alpha, rule='RH-subsystem')
    if jacobian[0, 0] >= 0 and verdict.is_stable:
        return StabilityVerdict(Classification.INCONCLUSIVE, 'RH-subsystem', verdict.margin)
    return verdict


def threshold_verdict(r0, rule):
    """Disease-free verdict from R0 alone: stable below 1, unstable above."""
    if r0 < 1:
        return StabilityVerdict(Classification.STABLE, rule)
    if r0 > 1:
        return StabilityVerdict(Classification.UNSTABLE, rule)
    return StabilityVerdict(Classification.INCONCLUSIVE, rule)
