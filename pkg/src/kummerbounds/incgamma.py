"""Lower incomplete Gamma function: closed forms, enclosures and a scaled evaluator.

Three families of two-sided bounds for ``gamma(nu, x)`` are provided:

* Taylor bounds, from the truncated series of ``exp(-s)`` with a bounded
  remainder; good for small ``x``.
* Laurent bounds, from repeated integration by parts of the upper tail;
  good for large ``x`` and ``0 < nu < 1``.
* Pade bounds of order 0, 1, 2 for the same tail; good from ``x ~ 1`` on.

Non-integer orders above one are reduced to their fractional part with
``gamma(nu, x) = (nu-1) gamma(nu-1, x) - x^(nu-1) e^(-x)``, applied upwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .enclosure import Enclosure
from .errors import DomainError, UnsupportedOrder
from .special import (
    falling_factorial,
    gamma_complete,
    log_gamma,
    negative_part,
    positive_part,
    taylor_weights,
)

__all__ = [
    "Enclosure",
    "GammaMethod",
    "gamma_elementary",
    "scaled_gamma",
    "taylor_enclosure_gamma",
    "laurent_enclosure_gamma",
    "pade_enclosure_gamma",
    "matched_enclosure_gamma",
    "gamma_enclosure",
    "scaled_gamma_enclosure",
    "laurent_factors",
    "pade_factors",
    "scaled_gamma_ulps",
]

_EPS = 2.0 ** -56
_TINY = 1e-300
_ROUND = 4.0 * 2.0 ** -52
_ULP = 2.0 ** -52


def _is_integer(nu: float) -> bool:
    return nu == math.floor(nu)


def gamma_elementary(k: int, x: float) -> float:
    """``gamma(k, x)`` for a positive integer ``k``.

    For ``x >= k`` the finite form obtained from ``gamma(1, x) = 1 - e^-x``
    and the upward recursion is used as is. Below that the same quantity
    is written as ``(k-1)! e^-x sum_{j >= k} x^j / j!``, which avoids
    subtracting two nearly equal numbers.
    """
    if k < 1 or k != int(k):
        raise DomainError(f"gamma_elementary needs a positive integer order, got {k!r}")
    k = int(k)
    if x < 0:
        raise DomainError(f"x must be nonnegative, got {x!r}")
    if x == 0:
        return 0.0
    if x >= k:
        e = math.exp(-x)
        g = -math.expm1(-x)
        for nu in range(2, k + 1):
            g = (nu - 1) * g - x ** (nu - 1) * e
        return g
    return _elementary_tail_scaled(k, x) * x ** k


def _elementary_tail_scaled(k: int, x: float) -> float:
    # (k-1)! e^-x sum_{j >= k} x^(j-k) / j!, i.e. gamma(k, x) / x^k
    term = 1.0 / math.factorial(k)
    total = term
    j = k
    while term > total * _EPS:
        j += 1
        term *= x / j
        total += term
    return math.factorial(k - 1) * math.exp(-x) * total


def _upper_cf(nu: float, x: float) -> float:
    # e^x x^-nu Gamma(nu, x) by the modified Lentz method
    b = x + 1.0 - nu
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    i = 0
    while True:
        i += 1
        an = -i * (i - nu)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        step = d * c
        h *= step
        if abs(step - 1.0) < 2.0 ** -53 or i > 100000:
            return h


def scaled_gamma(nu: float, x: float) -> float:
    """``gamma(nu, x) / x^nu``, equal to ``1/nu`` at ``x = 0``.

    Below ``x = nu + 1`` the positive series
    ``e^-x sum_j x^j / (nu)_{j+1}`` is summed; above, the complete Gamma
    function (in logarithmic form) minus the continued fraction of the
    upper function.
    """
    if not nu > 0:
        raise DomainError(f"order must be positive, got {nu!r}")
    if x < 0:
        raise DomainError(f"x must be nonnegative, got {x!r}")
    if x == 0:
        return 1.0 / nu
    if x <= nu + 1.0:
        term = 1.0 / nu
        total = term
        j = 0
        while term > total * _EPS:
            j += 1
            term *= x / (nu + j)
            total += term
        return math.exp(-x) * total
    head = 0.0
    if nu < 171.0 and nu * math.log(x) < 1400.0:
        half = x ** (0.5 * nu)
        head = gamma_complete(nu) / half / half
    if head == 0.0:
        # the logarithmic form amplifies rounding, so it is the fallback only
        head = math.exp(log_gamma(nu) - nu * math.log(x))
    return head - math.exp(-x) * _upper_cf(nu, x)


def scaled_gamma_ulps(nu: float) -> float:
    """Error budget of :func:`scaled_gamma`, in ulps, used for noise estimates."""
    return 16.0 if nu < 171.0 else 4096.0


def _taylor_scaled(nu: float, x: float, m: int) -> tuple[float, float, float]:
    # partial sum and remainder factor, both divided by x^nu, and the sum of
    # the absolute terms
    partial = 0.0
    magnitude = 0.0
    power = 1.0  # x^j / j!
    for j in range(m):
        term = power / (nu + j)
        partial += -term if j % 2 else term
        magnitude += term
        power *= x / (j + 1)
    last = power / (nu + m)
    return partial, last, magnitude + last


def taylor_enclosure_gamma(nu: float, x: float, m: int) -> Enclosure:
    """Bounds ``tau_m <= gamma(nu, x) <= T_m`` from the order-``m`` Taylor formula of ``e^-s``."""
    if not nu > 0:
        raise DomainError(f"order must be positive, got {nu!r}")
    u, U = taylor_weights(m, x)
    if x == 0:
        return Enclosure(0.0, 0.0)
    partial, last, magnitude = _taylor_scaled(nu, x, m)
    scale = x ** nu
    noise = (2 * m + 8) * _ULP * scale * magnitude
    return Enclosure.checked(scale * (partial + u * last), scale * (partial + U * last), noise)


def _check_fractional(nu: float, x: float):
    if not 0 < nu < 1:
        raise DomainError(f"tail approximants need 0 < nu < 1, got {nu!r}")
    if not x > 0:
        raise DomainError(f"tail approximants need x > 0, got {x!r}")


def laurent_factors(nu: float, x: float, q: int) -> tuple[float, float]:
    """The pair ``(lambda_q, Lambda_q)`` of truncated asymptotic sums."""
    if q < 0:
        raise DomainError(f"Laurent order must be nonnegative, got {q}")
    base = 0.0
    for k in range(q):
        base += falling_factorial(nu - 1.0, k) / x ** k
    last = falling_factorial(nu - 1.0, q) / x ** q
    return base + negative_part(last), base + positive_part(last)


def laurent_enclosure_gamma(nu: float, x: float, q: int) -> Enclosure:
    """Bounds ``Gamma(nu) - x^(nu-1) e^-x Lambda_q <= gamma(nu, x) <= Gamma(nu) - x^(nu-1) e^-x lambda_q``."""
    _check_fractional(nu, x)
    lam, Lam = laurent_factors(nu, x, q)
    pref = x ** (nu - 1.0) * math.exp(-x)
    full = gamma_complete(nu)
    noise = (q + 16) * _ULP * (full + pref * max(abs(lam), abs(Lam)))
    return Enclosure.checked(full - pref * Lam, full - pref * lam, noise)


def pade_factors(nu: float, x: float, q: int) -> tuple[float, float]:
    """The rational pair ``(pi_q, Pi_q)`` for ``q`` in ``{0, 1, 2}``."""
    if q < 0:
        raise DomainError(f"Pade order must be nonnegative, got {q}")
    if q == 0:
        return 0.0, 1.0
    if q == 1:
        return x / (x + 1.0 - nu), (x + 1.0) / (x + 2.0 - nu)
    if q == 2:
        lower = x * (x + 3.0 - nu) / (x * x + 2.0 * (2.0 - nu) * x + (1.0 - nu) * (2.0 - nu))
        upper = (x * x + (5.0 - nu) * x + 2.0) / (
            x * x + 2.0 * (3.0 - nu) * x + (2.0 - nu) * (3.0 - nu))
        return lower, upper
    raise UnsupportedOrder(f"Pade bounds are available for q <= 2 only, got {q}")


def pade_enclosure_gamma(nu: float, x: float, q: int) -> Enclosure:
    """Bounds ``Gamma(nu) - x^(nu-1) e^-x Pi_q <= gamma(nu, x) <= Gamma(nu) - x^(nu-1) e^-x pi_q``."""
    _check_fractional(nu, x)
    lower, upper = pade_factors(nu, x, q)
    pref = x ** (nu - 1.0) * math.exp(-x)
    full = gamma_complete(nu)
    noise = 16 * _ULP * (full + pref * upper)
    return Enclosure.checked(full - pref * upper, full - pref * lower, noise)


def matched_enclosure_gamma(nu: float, x: float, m: int = 4, q: int = 1,
                            tail: str = "pade") -> Enclosure:
    """Best available bounds for ``gamma(nu, x)`` from matching several families.

    Integer orders give a zero-width enclosure. Otherwise the Taylor bounds
    and the tail bounds (``tail`` is ``"pade"`` or ``"laurent"``) are
    intersected at the fractional part of ``nu``, pushed up to ``nu`` with
    the recursion, and intersected once more with the Taylor bounds taken
    directly at ``nu``. The tail family is skipped at ``x = 0``.
    """
    if not nu > 0:
        raise DomainError(f"order must be positive, got {nu!r}")
    if x < 0:
        raise DomainError(f"x must be nonnegative, got {x!r}")
    if tail not in ("pade", "laurent"):
        raise DomainError(f"unknown tail family {tail!r}")
    if _is_integer(nu):
        return Enclosure.point(gamma_elementary(int(nu), x))
    steps = int(math.floor(nu))
    base = nu - steps
    enc = taylor_enclosure_gamma(base, x, m)
    if x > 0:
        if tail == "pade":
            enc = enc.intersect(pade_enclosure_gamma(base, x, q))
        else:
            enc = enc.intersect(laurent_enclosure_gamma(base, x, q))
    if steps == 0:
        return enc
    e = math.exp(-x)
    # the upward recursion cancels badly for small x; carry a bound on the
    # accumulated rounding error and widen by it before intersecting
    err = _ROUND * max(abs(enc.lo), abs(enc.hi))
    for i in range(steps):
        prev = base + i
        shift = x ** prev * e
        err = prev * err + _ROUND * (prev * max(abs(enc.lo), abs(enc.hi)) + shift)
        enc = enc.affine(prev, -shift)
    enc = Enclosure(enc.lo - err, enc.hi + err, err)
    return enc.intersect(taylor_enclosure_gamma(nu, x, m))


@dataclass(frozen=True)
class GammaMethod:
    """Selects how ``gamma(nu, x)`` is enclosed.

    ``kind`` is one of ``"elementary"``, ``"taylor"``, ``"laurent"``,
    ``"pade"``, ``"matched"``.
    """

    kind: str
    m: int = 4
    q: int = 1

    def __post_init__(self):
        if self.kind not in ("elementary", "taylor", "laurent", "pade", "matched"):
            raise DomainError(f"unknown method {self.kind!r}")
        if self.m < 1:
            raise DomainError(f"Taylor order must be >= 1, got {self.m}")
        if self.q < 0:
            raise DomainError(f"tail order must be >= 0, got {self.q}")
        if self.kind in ("pade", "matched") and self.q > 2:
            raise UnsupportedOrder(f"Pade bounds are available for q <= 2 only, got {self.q}")


def gamma_enclosure(nu: float, x: float, method: GammaMethod) -> Enclosure:
    kind = method.kind
    if kind == "elementary":
        if not _is_integer(nu):
            raise DomainError(f"elementary closed form needs an integer order, got {nu!r}")
        return Enclosure.point(gamma_elementary(int(nu), x))
    if kind == "taylor":
        return taylor_enclosure_gamma(nu, x, method.m)
    if kind == "laurent":
        return laurent_enclosure_gamma(nu, x, method.q)
    if kind == "pade":
        return pade_enclosure_gamma(nu, x, method.q)
    return matched_enclosure_gamma(nu, x, method.m, method.q)


def scaled_gamma_enclosure(nu: float, x: float, m: int = 4, q: int = 1,
                           tail: str = "pade") -> Enclosure:
    """Matched bounds for ``gamma(nu, x) / x^nu``, collapsing to ``1/nu`` at ``x = 0``.

    The Taylor bounds are formed in scaled form directly, so tiny ``x`` never
    divides by an underflowed power; the other families join in whenever
    ``x^-nu`` is representable.
    """
    if not nu > 0:
        raise DomainError(f"order must be positive, got {nu!r}")
    if x < 0:
        raise DomainError(f"x must be nonnegative, got {x!r}")
    if x == 0:
        return Enclosure.point(1.0 / nu)
    if _is_integer(nu):
        k = int(nu)
        if x >= k:
            value = gamma_elementary(k, x) / x ** k
        else:
            value = _elementary_tail_scaled(k, x)
        return Enclosure.point(value, (k + 16) * _ULP * value)
    u, U = taylor_weights(m, x)
    partial, last, magnitude = _taylor_scaled(nu, x, m)
    noise = (2 * m + 8) * _ULP * magnitude
    direct = Enclosure.checked(partial + u * last, partial + U * last, noise)
    try:
        scale = x ** -nu
    except OverflowError:
        return direct
    if not math.isfinite(scale):
        return direct
    enc = matched_enclosure_gamma(nu, x, m, q, tail)
    return Enclosure.checked(enc.lo * scale, enc.hi * scale, enc.noise * scale).intersect(direct)
