"""Medina's polynomial sequence and the arctangent approximants built from it.

The sequence starts from the degree-6 seed

    p_1(x) = 4 - 4x^2 + 5x^4 - 4x^5 + x^6

and grows by p_m = x^4 (1-x)^4 p_{m-1} + (-4)^(m-1) p_1, giving degree
8m - 2.  An equivalent closed form divides x^{4m} (1-x)^{4m} - (-4)^m
exactly by 1 + x^2; both constructions are exposed and agree coefficient
for coefficient.  Scaling p_m by (-1)^(m+1) 4^m and integrating from 0
yields the degree-(8m-1) approximant h_m with h_m(0) = 0 and the uniform
guarantee

    |h_m(x) - arctan(x)| <= 4^(-5m)    for all x in [0, 1].

Construction cost grows quickly with m while evaluation is the hot path,
so constructed polynomials are memoized per index; the caches are
write-once and safe under concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .poly_core import (
    Poly,
    RatLike,
    poly,
    poly_add,
    poly_antiderivative,
    poly_divmod,
    poly_mul,
    poly_pow,
    poly_scale,
    poly_to_strings,
    rat,
)

_SEED: Poly = poly([4, 0, -4, 0, 5, -4, 1])
_HUMP: Poly = poly([0, 1, -1])  # x(1 - x), the factor that damps each step
_ONE_PLUS_XSQ: Poly = poly([1, 0, 1])


def _check_index(m) -> int:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"sequence index must be an integer >= 1, got {m!r}")
    return m


def medina_p1() -> Poly:
    """The degree-6 seed polynomial 4 - 4x^2 + 5x^4 - 4x^5 + x^6."""
    return _SEED


@lru_cache(maxsize=None)
def window_poly(m: int) -> Poly:
    """Coefficients of x^{4m} (1-x)^{4m}, degree 8m, tiny throughout [0, 1]."""
    _check_index(m)
    return poly_pow(_HUMP, 4 * m)


def _unfold_recurrence(seed: Poly, m: int) -> Poly:
    """Run p_j = x^4 (1-x)^4 p_{j-1} + (-4)^(j-1) * seed up from p_1 = seed."""
    step = poly_pow(_HUMP, 4)
    p = seed
    for j in range(2, m + 1):
        p = poly_add(poly_mul(step, p), poly_scale(seed, Fraction(-4) ** (j - 1)))
    return p


@lru_cache(maxsize=None)
def medina_p_recurrence(m: int) -> Poly:
    """p_m built by unfolding the recurrence; degree 8m - 2."""
    _check_index(m)
    return _unfold_recurrence(_SEED, m)


def medina_closed_numerator(m: int) -> Poly:
    """x^{4m} (1-x)^{4m} - (-4)^m, the numerator divided by 1 + x^2 below."""
    _check_index(m)
    return poly_add(window_poly(m), poly([-((-4) ** m)]))


@lru_cache(maxsize=None)
def medina_p_closed(m: int) -> Poly:
    """p_m via exact division of the closed-form numerator by 1 + x^2.

    The division must come out even; a nonzero remainder means the
    construction itself is broken, so that raises instead of returning
    a truncated quotient.
    """
    _check_index(m)
    quotient, remainder = poly_divmod(medina_closed_numerator(m), _ONE_PLUS_XSQ)
    if remainder:
        raise ArithmeticError(
            f"1 + x^2 does not divide the closed-form numerator at m={m}"
        )
    return quotient


def medina_scale(m: int) -> Fraction:
    """The normalizer (-1)^(m+1) * 4^m: 4, -16, 64, ..."""
    _check_index(m)
    return Fraction((-1) ** (m + 1) * 4**m)


@lru_cache(maxsize=None)
def medina_h(m: int) -> Poly:
    """Approximant h_m: antiderivative of p_m / ((-1)^(m+1) 4^m), anchored at 0.

    Degree 8m - 1.
    """
    _check_index(m)
    return poly_antiderivative(poly_scale(medina_p_recurrence(m), 1 / medina_scale(m)))


def medina_error_bound(m: int) -> Fraction:
    """The guaranteed uniform bound 4^(-5m) on |h_m - arctan| over [0, 1]."""
    _check_index(m)
    return Fraction(1, 4 ** (5 * m))


def medina_min_m_for(eps: RatLike) -> int:
    """Smallest index whose guaranteed bound 4^(-5m) is at most eps."""
    eps = rat(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    m = 1
    while medina_error_bound(m) > eps:
        m += 1
    return m


@dataclass(frozen=True)
class MedinaPair:
    """One sequence member: index, polynomial, approximant, guaranteed bound."""

    m: int
    p: Poly
    h: Poly
    bound: Fraction

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "p": poly_to_strings(self.p),
            "h": poly_to_strings(self.h),
            "bound": str(self.bound),
        }


def medina_pair(m: int, *, closed: bool = False) -> MedinaPair:
    """Bundle (m, p_m, h_m, bound); closed=True takes p_m from the closed form."""
    _check_index(m)
    p = medina_p_closed(m) if closed else medina_p_recurrence(m)
    return MedinaPair(m=m, p=p, h=medina_h(m), bound=medina_error_bound(m))
