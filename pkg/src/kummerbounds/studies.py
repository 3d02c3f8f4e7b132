"""Crossover points, suprema and the worked-example reports.

A matched enclosure takes the larger of two lower bounds and the smaller of
two upper bounds; the points where the active family changes, and the
supremum of the resulting relative uncertainty, are located here by a
coarse scan followed by bisection or golden-section refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from .enclosure import Enclosure
from .errors import DomainError
from .incgamma import matched_enclosure_gamma, pade_enclosure_gamma, taylor_enclosure_gamma
from .kummer import (
    KummerParams,
    elementary_enclosure_N,
    expansion_enclosure,
    taylor_enclosure_N,
)

__all__ = [
    "find_roots",
    "outward_bracket",
    "maximize",
    "KummerStudy",
    "GammaStudy",
    "Check",
    "EXAMPLES",
    "run_example",
    "EXAMPLE_I",
    "EXAMPLE_II",
    "EXAMPLE_III",
    "GAMMA_HALF",
]


def find_roots(f: Callable[[float], float], a: float, b: float, step: float = 1e-3,
               xtol: float = 1e-12) -> List[float]:
    """All sign changes of ``f`` on ``[a, b]`` visible at resolution ``step``, bisected to ``xtol``."""
    count = int(round((b - a) / step))
    roots = []
    x_prev = a
    f_prev = f(a)
    for i in range(1, count + 1):
        x = a + i * step
        fx = f(x)
        if (f_prev > 0) != (fx > 0):
            lo, hi, f_lo = x_prev, x, f_prev
            while hi - lo > xtol:
                mid = 0.5 * (lo + hi)
                fm = f(mid)
                if (fm > 0) == (f_lo > 0):
                    lo, f_lo = mid, fm
                else:
                    hi = mid
            roots.append(0.5 * (lo + hi))
        x_prev, f_prev = x, fx
    return roots


def outward_bracket(x: float, resolution: float = 0.01) -> Tuple[float, float]:
    """Grid points of spacing ``resolution`` enclosing ``x``, as in ``x in (1.92, 1.93)``."""
    k = math.floor(x / resolution)
    lo = round(k * resolution, 10)
    hi = round((k + 1) * resolution, 10)
    return lo, hi


def maximize(f: Callable[[float], float], a: float, b: float,
             step: float = 1e-3, xtol: float = 1e-10) -> Tuple[float, float]:
    """Maximum of ``f`` on ``[a, b]``: grid scan then golden section around the best node."""
    count = int(round((b - a) / step))
    best_x, best_f = a, f(a)
    for i in range(1, count + 1):
        x = a + i * step
        fx = f(x)
        if fx > best_f:
            best_x, best_f = x, fx
    lo, hi = max(a, best_x - step), min(b, best_x + step)
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    c = hi - inv_phi * (hi - lo)
    d = lo + inv_phi * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > xtol:
        if fc > fd:
            hi, d, fd = d, c, fc
            c = hi - inv_phi * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + inv_phi * (hi - lo)
            fd = f(d)
    for x in (lo, hi, 0.5 * (lo + hi)):
        fx = f(x)
        if fx > best_f:
            best_x, best_f = x, fx
    return best_x, best_f


def _ratio(lo: float, hi: float) -> float:
    return Enclosure(lo, hi).relative_uncertainty()


@dataclass(frozen=True)
class KummerStudy:
    """Taylor bounds of order ``m`` matched with ``n``-term Gamma bounds for one ``(alpha, delta)``.

    With ``elementary`` set, the Gamma bounds use elementary substitutes
    for the incomplete Gammas (matched Taylor ``gamma_m`` / Pade ``gamma_q``).
    """

    params: KummerParams
    n: int
    m: int
    elementary: bool = False
    gamma_m: int = 4
    gamma_q: int = 1

    def taylor(self, x: float) -> Enclosure:
        return taylor_enclosure_N(self.params, self.m, x)

    def gamma(self, x: float) -> Enclosure:
        if self.elementary:
            return elementary_enclosure_N(self.params, self.n, self.gamma_m, self.gamma_q, x)
        return expansion_enclosure(self.params, self.n, x)

    def matched(self, x: float) -> Enclosure:
        return self.taylor(x).intersect(self.gamma(x))

    def xi(self, x: float) -> float:
        return self.gamma(x).relative_uncertainty()

    def eta(self, x: float) -> float:
        return self.matched(x).relative_uncertainty()

    def lower_switches(self, a: float = 0.0, b: float = 10.0) -> List[float]:
        """Points where the matched lower bound changes family (Taylor minus Gamma changes sign)."""
        return find_roots(lambda x: self.taylor(x).lo - self.gamma(x).lo, a, b)

    def upper_switches(self, a: float = 0.0, b: float = 10.0) -> List[float]:
        return find_roots(lambda x: self.gamma(x).hi - self.taylor(x).hi, a, b)

    def sup_eta(self, a: float = 0.0, b: float = 12.0) -> Tuple[float, float]:
        return maximize(self.eta, a, b, step=5e-3)


@dataclass(frozen=True)
class GammaStudy:
    """Taylor bounds of order ``m`` matched with Pade bounds of order ``q`` for ``gamma(nu, .)``, ``0 < nu < 1``."""

    nu: float
    m: int = 4
    q: int = 1

    def taylor(self, x: float) -> Enclosure:
        return taylor_enclosure_gamma(self.nu, x, self.m)

    def pade(self, x: float) -> Enclosure:
        return pade_enclosure_gamma(self.nu, x, self.q)

    def matched(self, x: float) -> Enclosure:
        return matched_enclosure_gamma(self.nu, x, self.m, self.q)

    def relative(self, x: float) -> float:
        return self.matched(x).relative_uncertainty()

    def lower_switches(self, a: float = 1e-3, b: float = 10.0) -> List[float]:
        return find_roots(lambda x: self.taylor(x).lo - self.pade(x).lo, a, b)

    def upper_switches(self, a: float = 1e-3, b: float = 10.0) -> List[float]:
        return find_roots(lambda x: self.pade(x).hi - self.taylor(x).hi, a, b)

    def sup_relative(self, a: float = 0.0, b: float = 10.0) -> Tuple[float, float]:
        return maximize(self.relative, a, b, step=1e-3)


EXAMPLE_I = KummerStudy(KummerParams(2.0, 1.5), n=2, m=4)
EXAMPLE_II = KummerStudy(KummerParams(0.5, 1.5), n=2, m=4, elementary=True)
EXAMPLE_III = KummerStudy(KummerParams(2.0, -0.5), n=4, m=4)
GAMMA_HALF = GammaStudy(0.5, m=4, q=1)


@dataclass(frozen=True)
class Check:
    """One published statement next to its recomputed value."""

    item: str
    published: str
    recomputed: str
    passed: bool


def _fmt(v: float) -> str:
    return repr(float(v))


def _equal(item: str, text: str, exact: float, value: float, rtol: float = 1e-14) -> Check:
    ok = abs(value - exact) <= rtol * abs(exact)
    return Check(item, f"= {text}", _fmt(value), ok)


def _below(item: str, limit: float, value: float) -> Check:
    return Check(item, f"< {limit}", _fmt(value), value < limit)


def _bracket(item: str, published: Tuple[float, float], roots: List[float]) -> Check:
    a, b = published
    if len(roots) != 1:
        return Check(item, f"in ({a}, {b})", "switches at " + ", ".join(map(_fmt, roots)), False)
    r = roots[0]
    lo, hi = outward_bracket(r)
    return Check(item, f"in ({a}, {b})", f"{_fmt(r)} in ({lo}, {hi})", a < r < b)


def _sup(item: str, limit: float, bracket: Tuple[float, float],
         found: Tuple[float, float]) -> List[Check]:
    x0, v = found
    a, b = bracket
    lo, hi = outward_bracket(x0)
    return [
        Check(f"sup {item}", f"< {limit}", _fmt(v), v < limit),
        Check(f"argmax {item}", f"in ({a}, {b})", f"{_fmt(x0)} in ({lo}, {hi})", a < x0 < b),
    ]


def _decreasing(item: str, f: Callable[[float], float], a: float, b: float,
                step: float) -> Check:
    count = int(round((b - a) / step))
    values = [f(a + i * step) for i in range(count + 1)]
    ok = all(values[i + 1] <= values[i] for i in range(count))
    return Check(f"{item} decreasing on [{a}, {b}]", "decreasing",
                 "decreasing" if ok else "not monotone", ok)


def _example_i() -> List[Check]:
    s = EXAMPLE_I
    g0 = s.gamma(0.0)
    checks = [
        _equal("g(0)", "3/32", 3 / 32, g0.lo),
        _equal("G(0)", "1/8", 1 / 8, g0.hi),
        _equal("xi(0)", "1/7", 1 / 7, s.xi(0.0)),
        _below("xi(1)", 0.098, s.xi(1.0)),
        _below("xi(3)", 0.045, s.xi(3.0)),
        _below("xi(7)", 0.012, s.xi(7.0)),
        _decreasing("xi", s.xi, 0.0, 10.0, 0.1),
        _bracket("j switches t -> g", (1.92, 1.93), s.lower_switches()),
        _bracket("J switches T -> G", (2.16, 2.17), s.upper_switches()),
        _equal("eta(0)", "0", 0.0, s.eta(0.0), rtol=0.0),
        _below("eta(1)", 0.0021, s.eta(1.0)),
    ]
    checks += _sup("eta", 0.062, (2.16, 2.17), s.sup_eta())
    return checks


def _example_ii() -> List[Check]:
    s = EXAMPLE_II
    exact = expansion_enclosure(s.params, s.n, 0.0)
    checks = [
        _equal("g(0)", "23/20", 23 / 20, exact.lo),
        _equal("G(0)", "6/5", 6 / 5, exact.hi),
    ]
    ok = True
    worst = -math.inf
    for i in range(1951):
        x = 0.5 + i * 0.01
        e = s.gamma(x)
        g = expansion_enclosure(s.params, s.n, x)
        worst = max(worst, e.lo - g.lo, g.hi - e.hi)
        ok = ok and e.lo <= g.lo and g.hi <= e.hi
    checks.append(Check("p <= g and G <= P on [0.5, 20]", "holds",
                        f"max violation {_fmt(worst)}", ok))
    checks += [
        _equal("theta(0)", "0", 0.0, s.eta(0.0), rtol=0.0),
        _below("theta(1)", 0.00028, s.eta(1.0)),
        _below("theta(3)", 0.0051, s.eta(3.0)),
        _below("theta(7)", 0.0011, s.eta(7.0)),
        _bracket("l switches t -> p", (1.95, 1.96), s.lower_switches(0.5, 10.0)),
        _bracket("L switches T -> P", (2.41, 2.42), s.upper_switches(0.5, 10.0)),
    ]
    checks += _sup("theta", 0.0074, (2.41, 2.42), s.sup_eta())
    return checks


def _example_iii() -> List[Check]:
    s = EXAMPLE_III
    g0 = s.gamma(0.0)
    checks = [
        _equal("g(0)", "667/768", 667 / 768, g0.lo),
        _equal("G(0)", "1087/768", 1087 / 768, g0.hi),
        _equal("xi(0)", "210/877", 210 / 877, s.xi(0.0)),
        _below("xi(1)", 0.22, s.xi(1.0)),
        _below("xi(3)", 0.15, s.xi(3.0)),
        _below("xi(7)", 0.046, s.xi(7.0)),
        _decreasing("xi", s.xi, 0.0, 10.0, 0.1),
        _bracket("j switches t -> g", (1.57, 1.58), s.lower_switches()),
        _bracket("J switches T -> G", (1.54, 1.55), s.upper_switches()),
        _equal("eta(0)", "0", 0.0, s.eta(0.0), rtol=0.0),
        _below("eta(1)", 0.016, s.eta(1.0)),
    ]
    checks += _sup("eta", 0.20, (1.57, 1.58), s.sup_eta())
    return checks


def _gamma_half() -> List[Check]:
    s = GAMMA_HALF
    worst = max(s.relative(i * 0.001) for i in range(10001))
    checks = [
        _below("max relative uncertainty on [0, 10] step 0.001", 0.005, worst),
        _bracket("h switches Taylor -> Pade", (1.16, 1.17), s.lower_switches()),
        _bracket("H switches Taylor -> Pade", (1.48, 1.49), s.upper_switches()),
    ]
    checks += _sup("relative uncertainty", 0.005, (1.48, 1.49), s.sup_relative())
    return checks


def _footnote() -> List[Check]:
    p = KummerParams(10.0, 10.0)
    enc = expansion_enclosure(p, 1, 0.0)
    total = enc.lo + enc.hi
    xi = enc.relative_uncertainty()
    return [
        Check("G_1(10,10,0) + g_1(10,10,0)", "< 0", _fmt(total), total < 0),
        Check("xi_1(10,10,0)", "finite, > 0", _fmt(xi), math.isfinite(xi) and xi > 0),
    ]


EXAMPLES = {
    "i": _example_i,
    "ii": _example_ii,
    "iii": _example_iii,
    "gamma-half": _gamma_half,
    "footnote": _footnote,
}


def run_example(which: str) -> List[Check]:
    """Recompute every published statement of one worked example."""
    try:
        fn = EXAMPLES[which]
    except KeyError:
        raise DomainError(f"unknown example {which!r}; choose from {sorted(EXAMPLES)}") from None
    return fn()
