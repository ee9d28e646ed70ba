"""Arctangent over the whole real line with exact error budgets.

Any rational argument is folded into [0, 1] through two exact identities,
arctan(-x) = -arctan(x) and arctan(x) = pi/2 - arctan(1/x), and the fold is
recorded step by step so every result carries its own derivation.  On the
reduced argument the value comes from the approximant h_m.  pi is not a
baked-in constant: it is bootstrapped from the same family as 4 * h_M(1),
so a reciprocal step adds the bootstrap's own budget, 4 * 4^(-5M), to the
bound.  Every result is an exact rational paired with an exact rational
bound on its distance from the true arctangent; decimal rendering happens
at the very end, correctly rounded from the exact value.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .medina import medina_error_bound, medina_h
from .poly_core import RatLike, poly_eval_horner, rat

# Decimal places printed when the caller asks to see past the guarantee.
FULL_DECIMAL_DIGITS = 30


class ReductionStep(enum.Enum):
    NEGATE = "Negate"
    RECIPROCAL = "Reciprocal"


@dataclass(frozen=True)
class ReductionTrace:
    """An argument, its image in [0, 1], and the identities applied in order."""

    original: Fraction
    reduced: Fraction
    steps: tuple[ReductionStep, ...]


def reduce(x: RatLike) -> ReductionTrace:
    """Fold x into [0, 1]; x = 1 stays put, so at most two steps ever apply."""
    x = rat(x)
    steps = []
    y = x
    if y < 0:
        steps.append(ReductionStep.NEGATE)
        y = -y
    if y > 1:
        steps.append(ReductionStep.RECIPROCAL)
        y = 1 / y
    return ReductionTrace(original=x, reduced=y, steps=tuple(steps))


@dataclass(frozen=True)
class PiEstimate:
    value: Fraction
    error_bound: Fraction
    source_m: int


def pi_estimate(source_m: int) -> PiEstimate:
    """pi approximated as 4 * h_M(1); the guarantee at x = 1 scales by 4.

    M = 1 gives the classic 22/7.
    """
    value = 4 * poly_eval_horner(medina_h(source_m), Fraction(1))
    return PiEstimate(
        value=value,
        error_bound=4 * medina_error_bound(source_m),
        source_m=source_m,
    )


@dataclass(frozen=True)
class ApproxResult:
    """An exact rational answer with its certified bound and derivation."""

    value: Fraction
    error_bound: Fraction
    m: int
    trace: ReductionTrace
    pi_terms_used: int


def medina_arctan(x: RatLike, m: int) -> ApproxResult:
    """Approximate arctan(x) with h_m after range reduction.

    The bound is 4^(-5m) from the approximant plus a full pi-bootstrap
    budget of 4 * 4^(-5m) whenever the reciprocal identity was applied
    (the bootstrap reuses the same index m).
    """
    trace = reduce(x)
    value = poly_eval_horner(medina_h(m), trace.reduced)
    pi_terms = 0
    if ReductionStep.RECIPROCAL in trace.steps:
        pi_terms = 1
        value = pi_estimate(m).value / 2 - value
    if ReductionStep.NEGATE in trace.steps:
        value = -value
    bound = medina_error_bound(m) * (1 + 4 * pi_terms)
    return ApproxResult(
        value=value, error_bound=bound, m=m, trace=trace, pi_terms_used=pi_terms
    )


def arctan_auto(x: RatLike, eps: RatLike) -> ApproxResult:
    """The smallest-m result whose whole budget, pi bootstrap included, meets eps."""
    eps = rat(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    trace = reduce(x)
    pi_terms = 1 if ReductionStep.RECIPROCAL in trace.steps else 0
    m = 1
    while medina_error_bound(m) * (1 + 4 * pi_terms) > eps:
        m += 1
    return medina_arctan(x, m)


def guaranteed_digits(bound: RatLike) -> int:
    """Largest d >= 0 with 10^-d / 2 >= bound; 0 when no place is certain."""
    bound = rat(bound)
    if bound <= 0:
        raise ValueError("bound must be positive")
    d = 0
    while Fraction(1, 2 * 10 ** (d + 1)) >= bound:
        d += 1
    return d


def decimal_str(value: RatLike, digits: int) -> str:
    """Fixed-point rendering with `digits` places, correctly rounded.

    Rounding is to nearest with ties to even, computed on the exact scaled
    rational, so the printed digits are the true rounded digits.
    """
    if not isinstance(digits, int) or isinstance(digits, bool) or digits < 0:
        raise ValueError(f"digits must be a nonnegative integer, got {digits!r}")
    scaled = round(rat(value) * 10**digits)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def approx_result_json(result: ApproxResult, *, full: bool = False) -> dict:
    """JSON document for one result; `full` prints past the guaranteed places."""
    digits = guaranteed_digits(result.error_bound)
    shown = FULL_DECIMAL_DIGITS if full else digits
    return {
        "value": str(result.value),
        "error_bound": str(result.error_bound),
        "m": result.m,
        "steps": [step.value for step in result.trace.steps],
        "decimal": decimal_str(result.value, shown),
        "decimal_digits_guaranteed": digits,
    }
