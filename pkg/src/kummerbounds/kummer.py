"""Enclosures of the reparametrized Kummer function.

``N(alpha, delta, x) = int_0^1 t^(alpha-1) (1-t)^delta e^(-x t) dt`` for
``alpha > 0``, ``delta > -1``, ``x >= 0``. Its expansion

    N = sum_k (-delta)_k / k! * gamma(alpha + k, x) / x^(alpha + k)

truncated after ``n`` terms is bracketed by adding the next Gamma term
multiplied by the lower or upper remainder coefficient. The standard
confluent function is recovered as
``M(alpha, beta, -x) = N(alpha, beta-alpha-1, x) / B(alpha, beta-alpha)`` and
``M(alpha, beta, x) = e^x N(beta-alpha, alpha-1, x) / B(alpha, beta-alpha)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .enclosure import Enclosure
from .errors import DomainError
from .incgamma import scaled_gamma, scaled_gamma_enclosure, scaled_gamma_ulps
from .remainder import RemainderCoefficients, bound_coefficients
from .special import beta, binomial_taylor_coeffs, log_gamma, taylor_weights

__all__ = [
    "KummerParams",
    "StandardParams",
    "ErrorEstimate",
    "gamma_partial_sum",
    "expansion_enclosure",
    "taylor_coefficients_N",
    "taylor_enclosure_N",
    "matched_enclosure_N",
    "elementary_enclosure_N",
    "error_bounds",
    "relative_uncertainty",
    "sup_norm_error_bound",
    "standard_M_enclosure",
    "beta_enclosure",
    "watson_bound",
]


@dataclass(frozen=True)
class KummerParams:
    alpha: float
    delta: float

    def __post_init__(self):
        if not self.alpha > 0:
            raise DomainError(f"alpha must be positive, got {self.alpha!r}")
        if not self.delta > -1:
            raise DomainError(f"delta must exceed -1, got {self.delta!r}")

    @property
    def integer_delta(self) -> bool:
        return self.delta >= 0 and self.delta == math.floor(self.delta)

    def to_standard(self) -> "StandardParams":
        """The ``(alpha, beta)`` with ``N(alpha, delta, x) = B M(alpha, beta, -x)``."""
        return StandardParams(self.alpha, self.alpha + self.delta + 1.0)


@dataclass(frozen=True)
class StandardParams:
    alpha: float
    beta: float

    def __post_init__(self):
        if not self.alpha > 0:
            raise DomainError(f"alpha must be positive, got {self.alpha!r}")
        if not self.beta > self.alpha:
            raise DomainError(f"beta must exceed alpha, got beta={self.beta!r}, "
                              f"alpha={self.alpha!r}")

    def negative_side(self) -> KummerParams:
        """Parameters of N giving ``M(alpha, beta, -x)``."""
        return KummerParams(self.alpha, self.beta - self.alpha - 1.0)

    def positive_side(self) -> KummerParams:
        """Parameters of N giving ``e^-x M(alpha, beta, x)``."""
        return KummerParams(self.beta - self.alpha, self.alpha - 1.0)

    @property
    def normalization(self) -> float:
        return beta(self.alpha, self.beta - self.alpha)


@dataclass(frozen=True)
class ErrorEstimate:
    """Signed bounds ``e <= eps_n <= E`` and the absolute bound ``|eps_n| <= calE``."""

    e: float
    E: float
    calE: float


_ULP = 2.0 ** -52


def _check(n: int, x: float):
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not x >= 0:
        raise DomainError(f"x must be nonnegative, got {x!r}")


def _partial_and_tail(p: KummerParams, n: int, x: float) -> tuple[float, float, float]:
    # partial sum, last scaled Gamma, and a bound on the rounding in the sum
    coeffs = binomial_taylor_coeffs(p.delta, n)
    partial = 0.0
    magnitude = 0.0
    for k, c in enumerate(coeffs):
        if c != 0.0:
            term = c * scaled_gamma(p.alpha + k, x)
            partial += term
            magnitude += abs(term)
    noise = (scaled_gamma_ulps(p.alpha + n) + n) * _ULP * magnitude
    return partial, scaled_gamma(p.alpha + n, x), noise


def gamma_partial_sum(p: KummerParams, n: int, x: float) -> float:
    """Sum of the first ``n`` terms of the incomplete-Gamma expansion of N."""
    _check(n, x)
    return _partial_and_tail(p, n, x)[0]


def expansion_enclosure(p: KummerParams, n: int, x: float) -> Enclosure:
    """``[g_n, G_n]``: the ``n``-term sum plus the lower/upper remainder term."""
    _check(n, x)
    coef = bound_coefficients(p.alpha, p.delta, n)
    partial, tail, noise = _partial_and_tail(p, n, x)
    last = max(abs(coef.r), abs(coef.upper)) * tail
    noise += scaled_gamma_ulps(p.alpha + n) * _ULP * last
    return Enclosure.checked(partial + coef.r * tail, partial + coef.upper * tail, noise)


def taylor_coefficients_N(p: KummerParams, m: int) -> list[float]:
    """``(-1)^k B(alpha + k, delta + 1) / k!`` for ``k = 0 .. m``."""
    b = beta(p.alpha, p.delta + 1.0)
    out = []
    fact = 1.0
    for k in range(m + 1):
        out.append((-1) ** k * b / fact)
        b *= (p.alpha + k) / (p.alpha + p.delta + 1.0 + k)
        fact *= k + 1
    return out


def taylor_enclosure_N(p: KummerParams, m: int, x: float) -> Enclosure:
    """``[t_m, T_m]`` from the power series of N with a bounded remainder."""
    if not x >= 0:
        raise DomainError(f"x must be nonnegative, got {x!r}")
    u, U = taylor_weights(m, x)
    coeffs = taylor_coefficients_N(p, m)
    partial = 0.0
    magnitude = 0.0
    power = 1.0
    for k in range(m):
        partial += coeffs[k] * power
        magnitude += abs(coeffs[k]) * power
        power *= x
    # coeffs[m] carries (-1)^m, which the weights already account for
    last = abs(coeffs[m]) * power
    noise = (2 * m + 16) * _ULP * (magnitude + last)
    return Enclosure.checked(partial + u * last, partial + U * last, noise)


def matched_enclosure_N(p: KummerParams, n: int, m: int, x: float) -> Enclosure:
    """Intersection of the Taylor bounds of order ``m`` and the ``n``-term Gamma bounds."""
    return taylor_enclosure_N(p, m, x).intersect(expansion_enclosure(p, n, x))


def elementary_enclosure_N(p: KummerParams, n: int, gamma_m: int, gamma_q: int,
                           x: float) -> Enclosure:
    """``[g_n, G_n]`` with every incomplete Gamma replaced by elementary bounds.

    Each term ``c * gamma(nu, x) / x^nu`` takes the lower Gamma bound when
    ``c`` helps the lower estimate (``c >= 0``) and the upper one otherwise,
    and conversely for the upper estimate. The Gamma bounds are the matched
    Taylor (order ``gamma_m``) and Pade (order ``gamma_q``) ones, so the
    result only involves exponentials, real powers and rational functions.
    Integer ``alpha`` needs no substitution.
    """
    _check(n, x)
    if p.alpha == math.floor(p.alpha):
        return expansion_enclosure(p, n, x)
    coef = bound_coefficients(p.alpha, p.delta, n)
    coeffs = binomial_taylor_coeffs(p.delta, n)
    lo = hi = 0.0
    magnitude = 0.0
    for k, c in enumerate(coeffs):
        if c == 0.0:
            continue
        enc = scaled_gamma_enclosure(p.alpha + k, x, gamma_m, gamma_q)
        lo += c * (enc.lo if c > 0 else enc.hi)
        hi += c * (enc.hi if c > 0 else enc.lo)
        magnitude += abs(c) * max(abs(enc.lo), abs(enc.hi)) + abs(c) * enc.noise
    enc = scaled_gamma_enclosure(p.alpha + n, x, gamma_m, gamma_q)
    lo += coef.r * (enc.lo if coef.r > 0 else enc.hi)
    up = coef.upper
    hi += up * (enc.hi if up > 0 else enc.lo)
    magnitude += max(abs(coef.r), abs(up)) * (max(abs(enc.lo), abs(enc.hi)) + enc.noise)
    noise = (n + 32) * _ULP * magnitude
    return Enclosure.checked(lo, hi, noise)


def error_bounds(p: KummerParams, n: int, x: float) -> ErrorEstimate:
    """Analytic bounds on ``eps_n = N - gamma_partial_sum``."""
    _check(n, x)
    coef = bound_coefficients(p.alpha, p.delta, n)
    tail = scaled_gamma(p.alpha + n, x)
    return ErrorEstimate(coef.r * tail, coef.upper * tail, coef.X * tail)


def relative_uncertainty(p: KummerParams, n: int, x: float) -> float:
    """``(G_n - g_n) / |G_n + g_n|``; ``inf`` if the denominator vanishes."""
    return expansion_enclosure(p, n, x).relative_uncertainty()


def sup_norm_error_bound(p: KummerParams, sigma: float, n: int) -> float:
    """Bound on ``sup_x x^sigma |eps_n(x)|`` valid for ``0 <= sigma <= alpha``."""
    if not 0 <= sigma <= p.alpha:
        raise DomainError(f"sigma must lie in [0, alpha={p.alpha!r}], got {sigma!r}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    X = bound_coefficients(p.alpha, p.delta, n).X
    peak = 1.0 if sigma == 0 else sigma ** sigma * math.exp(-sigma)
    return X * peak / (p.alpha - sigma + n)


def standard_M_enclosure(s: StandardParams, x: float, n: int, m: int,
                         branch: Optional[str] = None) -> Enclosure:
    """Bounds on the confluent hypergeometric function ``M(alpha, beta, x)`` for real ``x``.

    ``branch`` forces the ``"negative"`` (``x <= 0``) or ``"positive"``
    (``x >= 0``) representation; by default it follows the sign of ``x``.
    """
    if branch is None:
        branch = "negative" if x <= 0 else "positive"
    norm = s.normalization
    if branch == "negative":
        if x > 0:
            raise DomainError("negative-side representation needs x <= 0")
        enc = matched_enclosure_N(s.negative_side(), n, m, -x)
        return enc.affine(1.0 / norm)
    if branch == "positive":
        if x < 0:
            raise DomainError("positive-side representation needs x >= 0")
        enc = matched_enclosure_N(s.positive_side(), n, m, x)
        return enc.affine(math.exp(x) / norm)
    raise DomainError(f"unknown branch {branch!r}")


def beta_enclosure(p: KummerParams, n: int) -> Enclosure:
    """Bounds on ``B(alpha, delta + 1) = N(alpha, delta, 0)`` from ``n`` terms."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    coef: RemainderCoefficients = bound_coefficients(p.alpha, p.delta, n)
    terms = [c / (p.alpha + k) for k, c in enumerate(binomial_taylor_coeffs(p.delta, n))]
    partial = math.fsum(terms)
    tail = 1.0 / (p.alpha + n)
    # each term carries a few ulps; the alternating sum can cancel most of its size
    noise = (n + 4) * _ULP * math.fsum(abs(t) for t in terms)
    return Enclosure.checked(partial + coef.r * tail, partial + coef.upper * tail, noise)


def watson_bound(coeffs: Sequence[float], exponents: Sequence[float], b: float,
                 x: float) -> float:
    """``sum_k p_k gamma(lambda_k + 1, b x) / x^(lambda_k + 1)``.

    If ``psi(t) >= sum_k p_k t^lambda_k`` on ``(0, b)`` this is a lower bound
    for ``int_0^b psi(t) e^(-x t) dt`` (an upper bound for the reversed
    inequality). ``b`` may be ``inf``, which needs ``x > 0``.
    """
    if len(coeffs) != len(exponents):
        raise DomainError("coefficients and exponents differ in length")
    if any(not lam > -1 for lam in exponents):
        raise DomainError("exponents must exceed -1")
    if not x >= 0:
        raise DomainError(f"x must be nonnegative, got {x!r}")
    total = 0.0
    for pk, lam in zip(coeffs, exponents):
        nu = lam + 1.0
        if math.isinf(b):
            if x == 0:
                raise DomainError("an infinite range needs x > 0")
            total += pk * math.exp(log_gamma(nu) - nu * math.log(x))
        else:
            total += pk * b ** nu * scaled_gamma(nu, b * x)
    return total
