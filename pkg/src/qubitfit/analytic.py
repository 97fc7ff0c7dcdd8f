"""Closed-form output of the circuit and its cubic Maclaurin truncation.

Derivation sketch, using the basis convention of :mod:`qubitfit.circuit`
(first tensor slot rotated by x - theta2, second by x - theta1):

Each qubit factor after R(phi) H |0> has amplitudes ((c - s), (c + s)) / sqrt(2)
with c = cos(phi/2), s = sin(phi/2), giving outcome probabilities

    p0(phi) = (1 - sin phi) / 2,    p1(phi) = (1 + sin phi) / 2.

The output is therefore the g-weighted product of single-qubit
probabilities, which regroups into the two-frequency trig expansion

    c0 + c1*sin(x - theta1) + c2*sin(x - theta2)
       + c3*sin(x - theta1)*sin(x - theta2)

with c-coefficients that are fixed +/- combinations of g/4. Substituting
the degree-3 Maclaurin series of sin(x - theta),

    sin(x - theta) = -sin t + cos t * x + (sin t / 2) * x^2 - (cos t / 6) * x^3 + O(x^4),

and truncating products at degree 3 yields a cubic polynomial in x whose
coefficients are smooth functions of all six parameters. The truncation
error is O(x^4), which the test suite checks by a step-doubling ratio.

This module is an independent route to the same numbers as the simulator
in :mod:`qubitfit.circuit`; the two are cross-checked against each other
and neither may be rewritten in terms of the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circuit import CircuitParams


@dataclass(frozen=True)
class CubicPoly:
    """Coefficients of a0 + a1*x + a2*x^2 + a3*x^3."""

    a0: float
    a1: float
    a2: float
    a3: float

    def __call__(self, x):
        """Evaluate by Horner's rule; accepts scalars or arrays."""
        return self.a0 + x * (self.a1 + x * (self.a2 + x * self.a3))

    def as_array(self) -> np.ndarray:
        return np.array([self.a0, self.a1, self.a2, self.a3])


@dataclass(frozen=True)
class TrigForm:
    """Coefficients of c0 + c1*sin(x-t1) + c2*sin(x-t2) + c3*sin(x-t1)*sin(x-t2)."""

    c0: float
    c1: float
    c2: float
    c3: float

    def evaluate(self, theta1: float, theta2: float, x):
        s1 = np.sin(x - theta1)
        s2 = np.sin(x - theta2)
        return self.c0 + self.c1 * s1 + self.c2 * s2 + self.c3 * s1 * s2


def closed_form_expectation(params: CircuitParams, x):
    """Circuit output as a product of single-qubit probabilities.

    Evaluates sum_b g_b * p_{b_first}(x - theta2) * p_{b_second}(x - theta1)
    with p0(phi) = (1 - sin phi)/2 and p1(phi) = (1 + sin phi)/2. Accepts
    scalar or array x.
    """
    s_first = np.sin(np.asarray(x, dtype=float) - params.theta2)
    s_second = np.sin(np.asarray(x, dtype=float) - params.theta1)
    p_first0, p_first1 = 0.5 * (1.0 - s_first), 0.5 * (1.0 + s_first)
    p_second0, p_second1 = 0.5 * (1.0 - s_second), 0.5 * (1.0 + s_second)
    g = params.g
    out = (
        g[0] * p_first0 * p_second0
        + g[1] * p_first0 * p_second1
        + g[2] * p_first1 * p_second0
        + g[3] * p_first1 * p_second1
    )
    return float(out) if np.ndim(out) == 0 else out


def trig_form(g: np.ndarray) -> TrigForm:
    """Regroup the diagonal entries into the two-frequency trig coefficients."""
    g = np.asarray(g, dtype=float)
    if g.shape != (4,):
        raise ValueError(f"observable diagonal must have 4 entries, got shape {g.shape}")
    if not np.all(np.isfinite(g)):
        raise ValueError("observable diagonal entries must be finite")
    return TrigForm(
        c0=float((g[0] + g[1] + g[2] + g[3]) / 4.0),
        c1=float((-g[0] + g[1] - g[2] + g[3]) / 4.0),
        c2=float((-g[0] - g[1] + g[2] + g[3]) / 4.0),
        c3=float((g[0] - g[1] - g[2] + g[3]) / 4.0),
    )


def _sin_shift_series(theta: float) -> tuple[float, float, float, float]:
    # degree-3 Maclaurin coefficients of sin(x - theta) in x
    s, c = math.sin(theta), math.cos(theta)
    return (-s, c, 0.5 * s, -c / 6.0)


def _truncated_product(p: tuple[float, ...], q: tuple[float, ...]) -> tuple[float, ...]:
    # product of two cubics, keeping terms up to degree 3
    return tuple(
        sum(p[i] * q[k - i] for i in range(k + 1)) for k in range(4)
    )


def cubic_coefficients(params: CircuitParams) -> CubicPoly:
    """Degree-3 Maclaurin coefficients of the circuit output about x = 0.

    Computed symbolically from the trig regrouping: each sin(x - theta)
    is replaced by its cubic series and the cross product is truncated at
    degree 3. The result equals the true Maclaurin coefficients
    f^(k)(0) / k! for k <= 3, since discarded terms have degree >= 4.
    """
    tf = trig_form(params.g)
    q1 = _sin_shift_series(params.theta1)
    q2 = _sin_shift_series(params.theta2)
    cross = _truncated_product(q1, q2)
    a = [
        tf.c1 * q1[k] + tf.c2 * q2[k] + tf.c3 * cross[k] for k in range(4)
    ]
    a[0] += tf.c0
    return CubicPoly(a0=a[0], a1=a[1], a2=a[2], a3=a[3])


def cubic_remainder(params: CircuitParams, x: float) -> float:
    """|f(x) - P3(x)| where P3 is the cubic truncation about 0.

    Meaningful as a diagnostic for |x| <= 1; behaves as O(x^4) near 0.
    """
    poly = cubic_coefficients(params)
    return abs(closed_form_expectation(params, x) - poly(x))


def amplitude_quadratic_coefficients(params: CircuitParams) -> np.ndarray:
    """Degree-2 Maclaurin coefficients of each of the 4 amplitudes, shape (4, 3).

    Each single-qubit factor amplitude is cos or sin of (x/2 + pi/4 - theta/2),
    so its series in x follows from half-angle derivatives; the register
    amplitude is the product of its two factors truncated at degree 2.
    Exposed so that the quadratic structure of the amplitudes (what makes
    the expectation cubic after truncation) is directly checkable.
    """
    def factor_series(theta: float) -> np.ndarray:
        a = math.pi / 4.0 - 0.5 * theta
        sa, ca = math.sin(a), math.cos(a)
        # rows: amplitude of outcome 0 = cos(x/2 + a), outcome 1 = sin(x/2 + a)
        return np.array([
            [ca, -0.5 * sa, -0.125 * ca],
            [sa, 0.5 * ca, -0.125 * sa],
        ])

    first = factor_series(params.theta2)
    second = factor_series(params.theta1)
    out = np.empty((4, 3))
    for b_first in range(2):
        for b_second in range(2):
            p, q = first[b_first], second[b_second]
            out[2 * b_first + b_second] = [
                p[0] * q[0],
                p[0] * q[1] + p[1] * q[0],
                p[0] * q[2] + p[1] * q[1] + p[2] * q[0],
            ]
    return out
