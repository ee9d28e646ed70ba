"""Taylor partial sums of arctangent and the matching truncation analysis.

The series x - x^3/3 + x^5/5 - ... converges slowly near x = 1, where the
terms shrink only like 1/n.  This module quantifies that slowness exactly:
partial-sum polynomials, the alternating-series remainder bound, and a
search for the least degree meeting a target accuracy, judged either by
the remainder bound or by the certified true error.  Everything is exact
rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .medina import medina_h, medina_min_m_for
from .oracle import arctan_enclosure
from .poly_core import Poly, RatLike, poly_eval_horner, rat

DEGREE_CUTOFF = 10001

# Columns of one comparison row, in output order.
COMPARISON_COLUMNS = (
    "x",
    "eps",
    "taylor_min_degree",
    "medina_min_m",
    "medina_degree",
    "taylor_terms_evaluated",
)


class DegreeLimitError(RuntimeError):
    """The degree search passed DEGREE_CUTOFF without reaching the target."""


@dataclass(frozen=True)
class TaylorPoly:
    """A partial sum: its degree and its coefficient tuple."""

    degree: int
    poly: Poly


def _check_degree(n) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1 or n % 2 == 0:
        raise ValueError(f"degree must be an odd integer >= 1, got {n!r}")
    return n


def _check_unit_interval(x: RatLike) -> Fraction:
    x = rat(x)
    if not 0 <= x <= 1:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    return x


def taylor_poly(n: int) -> TaylorPoly:
    """The degree-n partial sum: (-1)^k / (2k+1) at power 2k+1, zeros elsewhere."""
    _check_degree(n)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range((n + 1) // 2):
        coeffs[2 * k + 1] = Fraction((-1) ** k, 2 * k + 1)
    return TaylorPoly(degree=n, poly=tuple(coeffs))


def taylor_remainder_bound(n: int, x: RatLike) -> Fraction:
    """First omitted term x^(n+2)/(n+2); bounds the truncation error on [0, 1].

    The bound overshoots the true error by a factor of roughly 1 + x^2.
    """
    _check_degree(n)
    x = _check_unit_interval(x)
    return x ** (n + 2) / (n + 2)


def _certified_below(partial: Fraction, x: Fraction, eps: Fraction):
    """Decide |arctan(x) - partial| < eps via enclosures, tightening as needed.

    Returns True/False once the enclosure is narrow enough that the answer
    cannot flip.  The ties eps and the enclosure endpoints are all rational,
    so equality is detected exactly and treated as "not below".
    """
    width = eps / 2**20
    for _ in range(12):
        enc = arctan_enclosure(x, width)
        worst = max(abs(partial - enc.lo), abs(partial - enc.hi))
        if worst < eps:
            return True
        best = Fraction(0) if enc.contains(partial) else min(
            abs(partial - enc.lo), abs(partial - enc.hi)
        )
        if best >= eps:
            return False
        width /= 2**10
    raise RuntimeError(
        f"could not separate the error at x={x} from eps={eps} "
        "after repeated enclosure tightening"
    )


def taylor_min_degree(x: RatLike, eps: RatLike, oracle_mode: bool = False) -> int:
    """Least odd n whose degree-n partial sum meets eps at x.

    With oracle_mode the test is the certified true error |T_n(x)-arctan x|;
    otherwise it is the remainder bound x^(n+2)/(n+2).  Either way the
    search walks n = 1, 3, 5, ... and raises DegreeLimitError past
    DEGREE_CUTOFF, which x = 1 with a small eps will hit: the bound decays
    like 1/n there.
    """
    x = _check_unit_interval(x)
    eps = rat(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")

    if not oracle_mode:
        n = 1
        while taylor_remainder_bound(n, x) >= eps:
            n += 2
            if n > DEGREE_CUTOFF:
                raise DegreeLimitError(
                    f"no degree up to {DEGREE_CUTOFF} meets eps={eps} at x={x}"
                )
        return n

    n = 1
    partial = x
    power = x
    xsq = x * x
    k = 1
    while True:
        if _certified_below(partial, x, eps):
            return n
        n += 2
        if n > DEGREE_CUTOFF:
            raise DegreeLimitError(
                f"no degree up to {DEGREE_CUTOFF} meets eps={eps} at x={x}"
            )
        power *= xsq
        term = power / (2 * k + 1)
        partial = partial - term if k % 2 else partial + term
        k += 1


def medina_min_m_observed(x: RatLike, eps: RatLike) -> int:
    """Least index m whose certified true error |h_m(x) - arctan(x)| is below eps.

    The oracle-mode counterpart of medina_min_m_for, so the comparison table
    can judge both families by the same criterion.  Capped at the index whose
    approximant degree 8m - 1 would pass DEGREE_CUTOFF.
    """
    x = _check_unit_interval(x)
    eps = rat(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    m = 1
    while True:
        value = poly_eval_horner(medina_h(m), x)
        if _certified_below(value, x, eps):
            return m
        m += 1
        if 8 * m - 1 > DEGREE_CUTOFF:
            raise DegreeLimitError(
                f"no index with degree up to {DEGREE_CUTOFF} meets eps={eps} at x={x}"
            )


def comparison_row(x: RatLike, eps: RatLike, oracle_mode: bool = True) -> dict:
    """One row of the degree-comparison table; keys are COMPARISON_COLUMNS.

    Both columns are judged the same way: certified true error when
    oracle_mode, guaranteed bounds otherwise.
    """
    x = _check_unit_interval(x)
    eps = rat(eps)
    n = taylor_min_degree(x, eps, oracle_mode)
    m = medina_min_m_observed(x, eps) if oracle_mode else medina_min_m_for(eps)
    return {
        "x": str(x),
        "eps": str(eps),
        "taylor_min_degree": n,
        "medina_min_m": m,
        "medina_degree": 8 * m - 1,
        "taylor_terms_evaluated": (n + 1) // 2,
    }
