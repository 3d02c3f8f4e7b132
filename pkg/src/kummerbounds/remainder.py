"""Remainder of the Taylor expansion of ``(1 - t)^delta`` on ``[0, 1)``.

Writing ``(1-t)^delta = sum_{k<n} (-delta)_k t^k / k! + rho_n(delta, t) t^n``,
the factor ``rho_n`` is monotone in ``t`` with constant sign, so its infimum
and supremum are the end values at ``t = 0`` and ``t -> 1``. Those extremes,
and a substitute upper coefficient when ``delta < 0`` (where the supremum is
infinite), are what the expansion of N multiplies its last Gamma term by.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError
from .oracle import DEFAULT_TOL, de_integrate
from .special import gamma_complete

__all__ = [
    "RemainderCoefficients",
    "rho_numeric",
    "bound_coefficients",
    "coefficient_asymptote",
    "taylor_coeff",
    "shifted_coeff",
]


def taylor_coeff(delta: float, n: int) -> float:
    """``(-delta)_n / n!``, accumulated as a product of ratios."""
    c = 1.0
    for k in range(n):
        c *= (k - delta) / (k + 1)
    return c


def shifted_coeff(delta: float, n: int) -> float:
    """``-(1-delta)_{n-1} / (n-1)!``, the limit of ``rho_n`` at ``t -> 1`` for ``delta > 0``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    c = 1.0
    for k in range(n - 1):
        c *= (k + 1 - delta) / (k + 1)
    return -c


@dataclass(frozen=True)
class RemainderCoefficients:
    """Bound coefficients for the ``n``-th remainder.

    ``r`` and ``R`` are the infimum and supremum of ``rho_n(delta, .)``
    (``R`` is ``inf`` when ``delta < 0``), ``S`` is the substitute upper
    coefficient used for ``delta`` in ``(-1, 0)``, and ``X`` bounds the
    absolute error.
    """

    n: int
    delta: float
    r: float
    R: float
    S: Optional[float]
    X: float

    @property
    def upper(self) -> float:
        """Coefficient of the upper bound: ``R`` for ``delta >= 0``, ``S`` otherwise."""
        return self.R if self.S is None else self.S


def bound_coefficients(alpha: float, delta: float, n: int) -> RemainderCoefficients:
    if not alpha > 0:
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    if not delta > -1:
        raise DomainError(f"delta must exceed -1, got {delta!r}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    left = taylor_coeff(delta, n)
    if delta >= 0:
        # the limit at t -> 1 is 0 rather than -1 when delta = 0
        right = shifted_coeff(delta, n) if delta > 0 else 0.0
        return RemainderCoefficients(
            n=n, delta=delta,
            r=min(left, right), R=max(left, right), S=None,
            X=max(abs(left), abs(right)),
        )
    prev = taylor_coeff(delta, n - 1)
    S = prev * ((alpha + n) / (delta + 1.0) - (alpha + delta + 1.0) / n)
    return RemainderCoefficients(n=n, delta=delta, r=left, R=math.inf, S=S, X=S)


def coefficient_asymptote(alpha: float, delta: float, n: int) -> float:
    """Leading large-``n`` behaviour of ``X_n(alpha, delta)``.

    ``1 / (|delta Gamma(-delta)| n^delta)`` for non-integer ``delta > 0`` and
    ``1 / ((1 + delta) Gamma(-delta) n^delta)`` for ``-1 < delta < 0``.
    """
    if not delta > -1:
        raise DomainError(f"delta must exceed -1, got {delta!r}")
    if delta == math.floor(delta):
        raise DomainError(f"no power-law asymptote for integer delta={delta!r}")
    g = gamma_complete(-delta)
    if delta > 0:
        return 1.0 / (abs(delta * g) * n ** delta)
    return 1.0 / ((1.0 + delta) * g * n ** delta)


def rho_numeric(delta: float, n: int, t: float, tol: float = DEFAULT_TOL) -> float:
    """``rho_n(delta, t)`` from its integral representation, by quadrature.

    ``(-delta)_n / (n-1)! * int_0^1 (1-u)^(n-1) (1-t u)^(delta-n) du``.
    Meant as a reference for tests, not for bound computations.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not 0 <= t < 1:
        raise DomainError(f"t must lie in [0, 1), got {t!r}")
    pref = n * taylor_coeff(delta, n)
    if pref == 0:
        return 0.0
    omt = 1.0 - t
    expo = delta - n

    def log_f(u, omu, log_u, log_omu):
        # 1 - t u = (1 - u) + u (1 - t), free of cancellation near u = 1
        return (n - 1) * log_omu + expo * np.log(omu + u * omt)

    return pref * de_integrate(log_f, tol=tol, decay=1.0, max_level=14).value
