"""
Quadrature weights of the fractional Adams-Bashforth-Moulton scheme.

For step n -> n+1 on a uniform grid with spacing h the predictor weights are

    b_{j,n+1} = h^a / a * ((n+1-j)^a - (n-j)^a),                j = 0..n

and the corrector weights are

    a_{0,n+1}   = h^a / (a(a+1)) * (n^(a+1) - (n-a)(n+1)^a)
    a_{j,n+1}   = h^a / (a(a+1)) * ((n-j+2)^(a+1) + (n-j)^(a+1) - 2(n-j+1)^(a+1))
    a_{n+1,n+1} = h^a / (a(a+1))

Both families only depend on the lag k = n - j (plus n for a_0), so the
solver works with tables indexed by lag. Differences of large powers are
evaluated through expm1/log1p to keep them accurate for long histories.
"""
from typing import NamedTuple

import numpy as np

from core.exceptions import DomainError, WeightIndexError
from core.types import FractionalOrder


class CorrectorTable(NamedTuple):
    """Corrector weights for steps n = 0..n_steps-1."""
    start: np.ndarray     # a_{0,n+1}, indexed by n
    interior: np.ndarray  # a_{j,n+1} for 1 <= j <= n, indexed by lag n - j
    last: float           # a_{n+1,n+1}


def _power_increment(lag, order):
    """(lag + 1)^order - lag^order, elementwise."""
    lag = np.asarray(lag, dtype=float)
    safe = np.where(lag > 0, lag, 1.0)
    stable = safe ** order * np.expm1(order * np.log1p(1.0 / safe))
    return np.where(lag > 0, stable, 1.0)


def _second_difference(lag, power):
    """(lag + 2)^power + lag^power - 2 (lag + 1)^power, elementwise."""
    lag = np.asarray(lag, dtype=float)
    centre = np.where(lag > 0, lag + 1.0, 2.0)
    inverse = 1.0 / centre
    stable = centre ** power * (
        np.expm1(power * np.log1p(inverse)) + np.expm1(power * np.log1p(-inverse))
    )
    return np.where(lag > 0, stable, 2.0 ** power - 2.0)


def _start_weight(n, order):
    """n^(a+1) - (n - a)(n + 1)^a, rewritten as a(n+1)^a - n((n+1)^a - n^a)."""
    n = np.asarray(n, dtype=float)
    return order * (n + 1.0) ** order - n * _power_increment(n, order)


def _check_step(h, n):
    if not h > 0:
        raise DomainError(f'Step size must be positive, got {h!r}.')
    if n < 0:
        raise WeightIndexError(f'Step index must be non-negative, got {n}.')


def predictor_weights(alpha, h, n, j):
    """Return b_{j,n+1}."""
    order = FractionalOrder.coerce(alpha).alpha
    _check_step(h, n)
    if not 0 <= j <= n:
        raise WeightIndexError(f'Predictor index j={j} outside 0..{n}.')
    return float(h ** order / order * _power_increment(n - j, order))


def corrector_weights(alpha, h, n, j):
    """Return a_{j,n+1}."""
    order = FractionalOrder.coerce(alpha).alpha
    _check_step(h, n)
    if not 0 <= j <= n + 1:
        raise WeightIndexError(f'Corrector index j={j} outside 0..{n + 1}.')
    scale = h ** order / (order * (order + 1.0))
    if j == n + 1:
        return float(scale)
    if j == 0:
        return float(scale * _start_weight(n, order))
    return float(scale * _second_difference(n - j, order + 1.0))


def predictor_weight_table(alpha, h, n_steps):
    """b weights by lag k = n - j, k = 0..n_steps-1."""
    order = FractionalOrder.coerce(alpha).alpha
    _check_step(h, n_steps)
    lags = np.arange(n_steps, dtype=float)
    return h ** order / order * _power_increment(lags, order)


def corrector_weight_table(alpha, h, n_steps):
    """Corrector weights for every step of an n_steps solve."""
    order = FractionalOrder.coerce(alpha).alpha
    _check_step(h, n_steps)
    scale = h ** order / (order * (order + 1.0))
    steps = np.arange(n_steps, dtype=float)
    lags = np.arange(max(n_steps - 1, 0), dtype=float)
    return CorrectorTable(
        start=scale * _start_weight(steps, order),
        interior=scale * _second_difference(lags, order + 1.0),
        last=scale,
    )
