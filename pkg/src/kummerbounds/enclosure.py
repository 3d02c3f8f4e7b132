"""Two-sided bounds for a real quantity."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import EnclosureCollapse

__all__ = ["Enclosure", "COLLAPSE_ULPS"]

# inversions up to this many ulps are treated as rounding noise
COLLAPSE_ULPS = 4


@dataclass(frozen=True)
class Enclosure:
    """A closed interval ``[lo, hi]`` known to contain some target value.

    Bounds are evaluated in ordinary double precision; ``hi`` may be
    ``+inf`` when no upper bound exists. ``noise`` is an estimate of the
    absolute floating-point error in either end. It only widens the
    tolerance for rounding inversions and takes no part in comparisons.
    """

    lo: float
    hi: float
    noise: float = field(default=0.0, compare=False, repr=False)

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise EnclosureCollapse(self.lo, self.hi)
        if math.isinf(self.lo):
            raise EnclosureCollapse(self.lo, self.hi)

    @classmethod
    def checked(cls, lo: float, hi: float, noise: float = 0.0) -> "Enclosure":
        """Build an enclosure, absorbing tiny inversions caused by rounding.

        If ``lo`` exceeds ``hi`` by at most a few ulps, or by no more than
        the estimated evaluation ``noise``, the midpoint is used for both
        ends; a larger inversion raises :class:`EnclosureCollapse`.
        """
        if lo > hi:
            scale = max(abs(lo), abs(hi))
            if lo - hi <= max(COLLAPSE_ULPS * math.ulp(scale), noise):
                mid = 0.5 * (lo + hi)
                return cls(mid, mid, noise)
            raise EnclosureCollapse(lo, hi)
        return cls(lo, hi, noise)

    @classmethod
    def point(cls, value: float, noise: float = 0.0) -> "Enclosure":
        return cls(value, value, noise)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def bounded(self) -> bool:
        return math.isfinite(self.hi)

    def contains(self, value: float, slack: float = 0.0) -> bool:
        return self.lo - slack <= value <= self.hi + slack

    def intersect(self, other: "Enclosure") -> "Enclosure":
        return Enclosure.checked(max(self.lo, other.lo), min(self.hi, other.hi),
                                 self.noise + other.noise)

    def affine(self, scale: float, shift: float = 0.0) -> "Enclosure":
        """Image under ``v -> scale * v + shift``; ``scale`` must be nonnegative."""
        if scale < 0:
            raise ValueError("affine image needs a nonnegative scale")
        noise = scale * self.noise + 2.0 ** -52 * (scale * max(abs(self.lo), abs(self.hi)) + abs(shift))
        return Enclosure.checked(scale * self.lo + shift, scale * self.hi + shift, noise)

    def relative_uncertainty(self) -> float:
        """``(hi - lo) / |hi + lo|``; zero for a point, ``inf`` if the sum vanishes."""
        if self.hi == self.lo:
            return 0.0
        if math.isinf(self.hi):
            return math.inf
        denom = abs(self.hi + self.lo)
        if denom < 1e-300:
            return math.inf
        return (self.hi - self.lo) / denom

    def __iter__(self):
        yield self.lo
        yield self.hi
