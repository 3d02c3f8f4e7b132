"""Independent reference values for N(alpha, delta, x) and gamma(nu, x).

Nothing here calls into the enclosure machinery: the Kummer integral is
evaluated by double-exponential (tanh-sinh) quadrature, the incomplete Gamma
function by an exactly summed rational series or a backward-evaluated
continued fraction, and complete Gammas come from the standard library.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import DomainError, OracleToleranceError

__all__ = [
    "QuadratureResult",
    "de_integrate",
    "n_reference",
    "gamma_reference",
    "gamma_series_reference",
    "gamma_cf_reference",
    "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-12
MIN_TOL = 1e-13


@dataclass(frozen=True)
class QuadratureResult:
    """A reference value with an absolute error estimate.

    ``est_error`` is absolute; a successful call guarantees
    ``est_error <= tol * |value|`` for the relative ``tol`` requested.
    """

    value: float
    est_error: float
    evaluations: int

    def __float__(self):
        return self.value


# log of the integrand as a function of (t, 1 - t), both given as arrays
# together with their logarithms
LogIntegrand = Callable[[np.ndarray, np.ndarray, np.ndarray, np.ndarray], np.ndarray]


def _softplus(z):
    # log(1 + exp(z)) without overflow
    return np.logaddexp(0.0, z)


def _level_sum(log_f: LogIntegrand, s: np.ndarray) -> float:
    z = np.pi * np.sinh(s)
    log_t = -_softplus(-z)
    log_omt = -_softplus(z)
    t = np.exp(log_t)
    omt = np.exp(log_omt)
    log_w = math.log(math.pi) + np.log(np.cosh(s)) + log_t + log_omt
    vals = np.exp(log_f(t, omt, log_t, log_omt) + log_w)
    return math.fsum(vals.tolist())


def de_integrate(
    log_f: LogIntegrand,
    tol: float = DEFAULT_TOL,
    decay: float = 1.0,
    min_level: int = 3,
    max_level: int = 12,
    extra_levels: int = 0,
) -> QuadratureResult:
    """Integrate a positive function over ``(0, 1)`` with the tanh-sinh rule.

    ``log_f`` returns the logarithm of the integrand; working in logs keeps
    algebraic endpoint singularities finite at every node. ``decay`` is the
    smallest power with which ``f(t) dt`` vanishes at the endpoints (for
    ``t^(a-1) (1-t)^d`` that is ``min(a, d+1)``); it fixes how far the
    transformed variable has to extend.

    Levels halve the step until two consecutive sums agree to ``tol``
    relative; ``extra_levels`` forces that many refinements beyond the
    stopping level.
    """
    if not tol >= MIN_TOL:
        raise DomainError(f"tolerance must be >= {MIN_TOL}, got {tol!r}")
    if decay <= 0:
        raise DomainError("decay exponent must be positive")
    s_max = math.asinh(800.0 / (math.pi * decay))
    k_max = int(math.ceil(s_max))
    s = np.arange(-k_max, k_max + 1, dtype=float)
    h = 1.0
    total = h * _level_sum(log_f, s)
    evaluations = s.size
    est = math.inf
    level = 0
    converged_at = None
    while level < max_level:
        level += 1
        h *= 0.5
        n_new = k_max << level
        odd = np.arange(-n_new + 1, n_new, 2, dtype=float)
        new = total / 2.0 + h * _level_sum(log_f, odd * h)
        evaluations += odd.size
        # never claim better than a few ulps of the sum
        est = max(abs(new - total), 4.0 * 2.0 ** -52 * abs(new))
        total = new
        if converged_at is None and level >= min_level and est <= tol * abs(total):
            converged_at = level
        if converged_at is not None and level >= converged_at + extra_levels:
            return QuadratureResult(total, est, evaluations)
    raise OracleToleranceError(
        f"tanh-sinh quadrature did not reach relative tolerance {tol:g} "
        f"(last change {est:.3g} on value {total:.17g})",
        QuadratureResult(total, est, evaluations),
    )


def n_reference(alpha: float, delta: float, x: float, tol: float = DEFAULT_TOL,
                extra_levels: int = 0) -> QuadratureResult:
    """Reference value of ``N(alpha, delta, x) = int_0^1 t^(alpha-1) (1-t)^delta e^(-x t) dt``."""
    if not (alpha > 0 and delta > -1 and x >= 0):
        raise DomainError(f"N is defined for alpha > 0, delta > -1, x >= 0; got "
                          f"({alpha!r}, {delta!r}, {x!r})")
    a1 = alpha - 1.0

    def log_f(t, omt, log_t, log_omt):
        return a1 * log_t + delta * log_omt - x * t

    return de_integrate(log_f, tol=tol, decay=min(alpha, delta + 1.0),
                        extra_levels=extra_levels)


def gamma_series_reference(nu: float, x: float) -> QuadratureResult:
    """``gamma(nu, x)`` from ``x^nu sum_j (-1)^j x^j / (j! (nu + j))``.

    The series is summed in exact rational arithmetic, so the only rounding
    is in the final conversion and in ``x**nu``. The alternating tail is
    bounded by the first omitted term once the terms decrease (``j >= x``).
    """
    if x == 0:
        return QuadratureResult(0.0, 0.0, 0)
    fx = Fraction(x)
    fnu = Fraction(nu)
    total = Fraction(0)
    power = Fraction(1)  # x^j / j!
    j = 0
    while True:
        term = power / (fnu + j)
        if j % 2:
            total -= term
        else:
            total += term
        j += 1
        power = power * fx / j
        nxt = power / (fnu + j)
        if j >= x and nxt * (1 << 60) <= abs(total):
            break
    scale = x ** nu
    value = scale * float(total)
    est = scale * (float(nxt) + 4.0 * abs(float(total)) * 2.0 ** -52)
    return QuadratureResult(value, est, j)


def _upper_gamma_cf(nu: float, x: float, depth: int) -> float:
    # Gamma(nu, x) e^x x^(-nu) as 1/(b0 + a1/(b1 + a2/(b2 + ...))), evaluated backwards
    tail = 0.0
    for i in range(depth, 0, -1):
        tail = -i * (i - nu) / (x + 2 * i + 1 - nu + tail)
    return 1.0 / (x + 1 - nu + tail)


def _complete_gamma(nu: float) -> float:
    if nu < 171.0:
        return math.gamma(nu)
    return math.exp(math.lgamma(nu))


def gamma_cf_reference(nu: float, x: float, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """``gamma(nu, x) = Gamma(nu) - Gamma(nu, x)`` with the upper function from its continued fraction."""
    depth = 16
    prev = _upper_gamma_cf(nu, x, depth)
    while True:
        depth *= 2
        cur = _upper_gamma_cf(nu, x, depth)
        if abs(cur - prev) <= 1e-3 * tol * abs(cur) or depth >= 1 << 14:
            break
        prev = cur
    upper = math.exp(nu * math.log(x) - x) * cur
    complete = _complete_gamma(nu)
    value = complete - upper
    est = abs(cur - prev) / abs(cur) * upper + 4.0 * 2.0 ** -52 * complete
    return QuadratureResult(value, est, depth)


def gamma_reference(nu: float, x: float, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """Reference value of the lower incomplete Gamma ``gamma(nu, x)``.

    Uses the exact series for ``x <= nu + 1`` and the continued fraction
    beyond.
    """
    if not tol >= MIN_TOL:
        raise DomainError(f"tolerance must be >= {MIN_TOL}, got {tol!r}")
    if not (nu > 0 and x >= 0):
        raise DomainError(f"gamma(nu, x) needs nu > 0, x >= 0; got ({nu!r}, {x!r})")
    if x <= nu + 1:
        res = gamma_series_reference(nu, x)
    else:
        res = gamma_cf_reference(nu, x, tol)
    if res.est_error > tol * abs(res.value):
        raise OracleToleranceError(
            f"gamma reference at nu={nu!r}, x={x!r} missed tolerance {tol:g}", res)
    return res
