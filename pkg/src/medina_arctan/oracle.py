"""Self-contained rigorous enclosures of arctangent in rational arithmetic.

This module is the ground truth the rest of the package is measured
against, so it deliberately shares no code with the approximation modules.
Everything reduces to alternating partial sums of

    arctan(y) = y - y^3/3 + y^5/5 - ...

evaluated only where the series converges fast, plus two exact identities:
oddness, and the difference form of the addition law, which gives
arctan(x) = arctan(1/2) + arctan(u) with u = (x - 1/2) / (1 + x/2).

For y in [0, 1/2] the series terms alternate in sign and decrease, so
consecutive partial sums bracket the limit; that yields two-sided bounds
with no rounding analysis at all.  Arguments in (1/2, 1] are pivoted about
1/2 as above, with u landing in (0, 1/3].  Arguments beyond 1 use
arctan(x) = pi/2 - arctan(1/x), where pi itself is enclosed as 4*arctan(1)
through the pivoted route, so nothing is circular and no decimal constant
is baked in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly_core import RatLike, rat

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Enclosure:
    """A closed rational interval certified to contain a real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"inverted enclosure [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, value: RatLike) -> bool:
        return self.lo <= rat(value) <= self.hi

    def to_json(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi)}


def _check_eps(eps: RatLike) -> Fraction:
    eps = rat(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    return eps


def _series_enclosure(x: Fraction, eps: Fraction) -> Enclosure:
    """Bracket from consecutive alternating partial sums; needs 0 < x <= 1/2.

    Stops at the first term not exceeding eps; that term is the width of the
    returned interval.
    """
    assert 0 < x <= _HALF
    prev = x  # partial sum through degree 1
    power = x
    xsq = x * x
    k = 1
    while True:
        power *= xsq
        term = power / (2 * k + 1)
        cur = prev - term if k % 2 else prev + term
        if term <= eps:
            return Enclosure(min(prev, cur), max(prev, cur))
        prev = cur
        k += 1


def arctan_enclosure(x: RatLike, eps: RatLike) -> Enclosure:
    """A rational interval containing arctan(x), of width at most eps."""
    x = rat(x)
    eps = _check_eps(eps)
    if x < 0:
        inner = arctan_enclosure(-x, eps)
        return Enclosure(-inner.hi, -inner.lo)
    if x == 0:
        return Enclosure(Fraction(0), Fraction(0))
    if x <= _HALF:
        return _series_enclosure(x, eps)
    if x <= 1:
        # Pivot about 1/2; u lies in (0, 1/3], where the series is fast.
        u = (x - _HALF) / (1 + x / 2)
        base = _series_enclosure(_HALF, eps / 2)
        rest = _series_enclosure(u, eps / 2)
        return Enclosure(base.lo + rest.lo, base.hi + rest.hi)
    # arctan(x) = pi/2 - arctan(1/x); both halves get half the budget.
    half_pi = pi_enclosure(eps)
    inv = arctan_enclosure(1 / x, eps / 2)
    return Enclosure(half_pi.lo / 2 - inv.hi, half_pi.hi / 2 - inv.lo)


def pi_enclosure(eps: RatLike) -> Enclosure:
    """A rational interval containing pi, of width at most eps.

    Scaled up from arctan(1), which resolves through the pivot at 1/2; the
    quarter-circle budget eps/4 widens by exactly 4 on scaling.
    """
    eps = _check_eps(eps)
    quarter = arctan_enclosure(Fraction(1), eps / 4)
    return Enclosure(4 * quarter.lo, 4 * quarter.hi)
