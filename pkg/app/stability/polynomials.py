"""
Characteristic polynomials of 2x2 and 3x3 Jacobians and their roots.

Polynomials are monic: lambda^2 + a1 lambda + a2 or
lambda^3 + w1 lambda^2 + w2 lambda + w3. Cubic roots use the trigonometric
or hyperbolic Cardano form of the depressed cubic, followed by one Newton
step on the original polynomial.
"""
import cmath
import math
from dataclasses import dataclass

import numpy as np

from core.exceptions import DimensionError, DomainError


@dataclass(frozen=True)
class CharPoly:
    coefficients: tuple

    def __post_init__(self):
        values = tuple(float(c) for c in self.coefficients)
        if len(values) not in (2, 3):
            raise DimensionError(f'Characteristic polynomial must have degree 2 or 3, got {len(values)}.')
        if not all(math.isfinite(c) for c in values):
            raise DomainError('Characteristic polynomial coefficients must be finite.')
        object.__setattr__(self, 'coefficients', values)

    @property
    def degree(self):
        return len(self.coefficients)

    def __call__(self, x):
        value = 1.0
        for c in self.coefficients:
            value = value * x + c
        return value

    def derivative(self, x):
        degree = self.degree
        value = degree * 1.0
        for power, c in zip(range(degree - 1, 0, -1), self.coefficients):
            value = value * x + power * c
        return value


@dataclass(frozen=True)
class EigenSet:
    values: tuple

    @property
    def dimension(self):
        return len(self.values)

    def residuals(self, poly):
        return [abs(poly(v)) for v in self.values]

    def as_pairs(self):
        return [[float(v.real), float(v.imag)] for v in self.values]


def char_poly(matrix):
    m = np.asarray(matrix, dtype=float)
    if m.shape == (2, 2):
        trace = m[0, 0] + m[1, 1]
        determinant = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        return CharPoly((-trace, determinant))
    if m.shape == (3, 3):
        trace = m[0, 0] + m[1, 1] + m[2, 2]
        minors = (
            m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
            + m[0, 0] * m[2, 2] - m[0, 2] * m[2, 0]
            + m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1]
        )
        determinant = (
            m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
            - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
            + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
        )
        return CharPoly((-trace, minors, -determinant))
    raise DimensionError(f'Expected a 2x2 or 3x3 matrix, got shape {m.shape}.')


def cubic_discriminant(poly):
    if poly.degree != 3:
        raise DimensionError('cubic_discriminant needs a degree-3 polynomial.')
    w1, w2, w3 = poly.coefficients
    return (
        18 * w1 * w2 * w3 + w1 ** 2 * w2 ** 2 - 4 * w1 ** 3 * w3
        - 4 * w2 ** 3 - 27 * w3 ** 2
    )


def _quadratic_roots(b, c):
    """Roots of x^2 + b x + c."""
    discriminant = b * b - 4 * c
    if discriminant >= 0:
        root = math.sqrt(discriminant)
        if b == 0 and root == 0:
            return (complex(0.0), complex(0.0))
        q = -0.5 * (b + math.copysign(root, b))
        return (complex(q), complex(c / q)) if q != 0 else (complex(0.0), complex(-b))
    root = math.sqrt(-discriminant)
    return (complex(-b / 2, root / 2), complex(-b / 2, -root / 2))


def _depressed_real_root(p, q, discriminant):
    """One real root of x^3 + p x + q."""
    if p == 0:
        return -float(np.cbrt(q))
    if discriminant > 0:
        # three real roots, p < 0
        radius = 2 * math.sqrt(-p / 3)
        cosine = 3 * q / (2 * p) * math.sqrt(-3 / p)
        return radius * math.cos(math.acos(max(-1.0, min(1.0, cosine))) / 3)
    if p < 0:
        ratio = -3 * abs(q) / (2 * p) * math.sqrt(-3 / p)
        return -2 * math.copysign(1.0, q) * math.sqrt(-p / 3) * math.cosh(
            math.acosh(max(1.0, ratio)) / 3
        )
    return -2 * math.sqrt(p / 3) * math.sinh(math.asinh(3 * q / (2 * p) * math.sqrt(3 / p)) / 3)


def _polish(poly, root):
    slope = poly.derivative(root)
    if slope == 0:
        return root
    candidate = root - poly(root) / slope
    return candidate if abs(poly(candidate)) <= abs(poly(root)) else root


def _cubic_roots(poly):
    w1, w2, w3 = poly.coefficients
    shift = w1 / 3
    p = w2 - w1 * w1 / 3
    q = 2 * w1 ** 3 / 27 - w1 * w2 / 3 + w3
    discriminant = -(4 * p ** 3 + 27 * q ** 2)
    x0 = _depressed_real_root(p, q, discriminant)
    # x^3 + p x + q = (x - x0)(x^2 + x0 x + x0^2 + p)
    x1, x2 = _quadratic_roots(x0, x0 * x0 + p)
    roots = [complex(x0) - shift, x1 - shift, x2 - shift]
    return tuple(_polish(poly, root) for root in roots)


def eigenvalues(poly):
    if poly.degree == 2:
        a1, a2 = poly.coefficients
        roots = _quadratic_roots(a1, a2)
    else:
        roots = _cubic_roots(poly)
    return EigenSet(tuple(_clean(root) for root in roots))


def _clean(root):
    """Drop imaginary parts that are rounding noise on a real root."""
    root = complex(root)
    if root.imag != 0 and abs(root.imag) <= 1e-14 * max(1.0, abs(root.real)):
        return complex(root.real, 0.0)
    return root


def argument(value):
    return abs(cmath.phase(value))
