"""Machine checks for the inequality chain behind the h_m guarantee.

Each lemma below is a concrete claim about the constructed polynomials,
checked in exact rational arithmetic on the grid x = k/grid_n over [0, 1]
for every index up to m_max.  There is no tolerance anywhere: symbolic
claims are coefficient equalities, pointwise claims are exact comparisons
of rationals.  Only the last step, comparing h_m against arctangent
itself, consults the enclosure oracle, and it does so at a width two
factors of 4 below the asserted bound so that enclosure slack can never
mask a violation.

The suite reports every lemma with a pass/fail flag and, when a claim
fails, a witness pinning down where.  A deliberately corrupted seed
polynomial can be injected to exercise that failure path end to end.

Workload is metered in grid-point evaluations; exceeding the caller's
limit aborts with the completed portion of the report attached.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .medina import (
    _unfold_recurrence,
    medina_h,
    medina_p1,
    medina_p_recurrence,
    medina_scale,
    window_poly,
)
from .oracle import arctan_enclosure
from .poly_core import (
    Poly,
    poly,
    poly_antiderivative,
    poly_derivative,
    poly_eval_horner,
    poly_eval_powers,
    poly_mul,
    poly_scale,
    poly_sub,
)

DEFAULT_WORK_LIMIT = 2_000_000

_HUMP: Poly = poly([0, 1, -1])
_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class Witness:
    """Where a claim was pinned down: grid point and/or index, both sides."""

    x: Optional[Fraction]
    m: Optional[int]
    lhs: Fraction
    rhs: Fraction

    def to_json(self) -> dict:
        return {
            "x": None if self.x is None else str(self.x),
            "m": self.m,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }


@dataclass(frozen=True)
class LemmaCheck:
    id: str
    description: str
    passed: bool
    witness: Optional[Witness] = None

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "passed": self.passed,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[LemmaCheck, ...]
    grid_size: int
    m_max: int

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_json(self) -> dict:
        return {
            "grid_size": self.grid_size,
            "m_max": self.m_max,
            "all_passed": self.all_passed,
            "checks": [check.to_json() for check in self.checks],
        }


class WorkLimitExceeded(RuntimeError):
    """Raised when the metered workload passes the limit; carries the part done."""

    def __init__(self, message: str, partial: VerificationReport):
        super().__init__(message)
        self.partial = partial


class _BudgetExhausted(Exception):
    pass


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, units: int = 1) -> None:
        self.used += units
        if self.used > self.limit:
            raise _BudgetExhausted()


def run_suite(
    grid_n: int,
    m_max: int,
    *,
    base_poly=None,
    work_limit: Optional[int] = None,
) -> VerificationReport:
    """Check every lemma on the k/grid_n grid for indices 1..m_max.

    base_poly overrides the seed of the sequence (the fault-injection hook);
    the default checks the polynomials the package actually ships.
    """
    if not isinstance(grid_n, int) or isinstance(grid_n, bool) or grid_n < 2:
        raise ValueError(f"grid_n must be an integer >= 2, got {grid_n!r}")
    if not isinstance(m_max, int) or isinstance(m_max, bool) or m_max < 1:
        raise ValueError(f"m_max must be an integer >= 1, got {m_max!r}")
    limit = DEFAULT_WORK_LIMIT if work_limit is None else work_limit
    if limit < 1:
        raise ValueError(f"work limit must be a positive integer, got {limit!r}")

    budget = _Budget(limit)
    xs = [Fraction(k, grid_n) for k in range(grid_n + 1)]
    indices = range(1, m_max + 1)

    if base_poly is None:
        p_of = {m: medina_p_recurrence(m) for m in indices}
        h_of = {m: medina_h(m) for m in indices}
    else:
        seed = poly(base_poly)
        p_of = {m: _unfold_recurrence(seed, m) for m in indices}
        h_of = {
            m: poly_antiderivative(poly_scale(p_of[m], 1 / medina_scale(m)))
            for m in indices
        }

    def check_peak_bound():
        symbolic = poly_sub(poly([_QUARTER]), _HUMP) == poly_mul(
            poly([-_HALF, 1]), poly([-_HALF, 1])
        )
        if not symbolic:
            return False, Witness(x=None, m=None, lhs=Fraction(0), rhs=_QUARTER)
        witness = None
        for x in xs:
            budget.spend()
            value = x * (1 - x)
            if value > _QUARTER or (value == _QUARTER) != (x == _HALF):
                return False, Witness(x=x, m=None, lhs=value, rhs=_QUARTER)
            if x == _HALF:
                witness = Witness(x=x, m=None, lhs=value, rhs=_QUARTER)
        return True, witness

    def check_peak_slope():
        budget.spend()
        slope = poly_derivative(_HUMP)
        at_half = poly_eval_horner(slope, _HALF)
        if slope != poly([1, -2]) or at_half != 0:
            return False, Witness(x=_HALF, m=None, lhs=at_half, rhs=Fraction(0))
        return True, None

    def check_power_bound():
        for m in indices:
            cap = Fraction(1, 4 ** (4 * m))
            for x in xs:
                budget.spend()
                value = (x * (1 - x)) ** (4 * m)
                if value > cap:
                    return False, Witness(x=x, m=m, lhs=value, rhs=cap)
        return True, None

    def check_integral_bound():
        for m in indices:
            cap = Fraction(1, 4 ** (4 * m))
            anti = poly_antiderivative(window_poly(m))
            for x in xs:
                budget.spend()
                integral = poly_eval_horner(anti, x)
                if integral > cap * x:
                    return False, Witness(x=x, m=m, lhs=integral, rhs=cap * x)
                if integral > cap:
                    return False, Witness(x=x, m=m, lhs=integral, rhs=cap)
        return True, None

    def check_closed_identity():
        for m in indices:
            shift = Fraction((-4) ** m)
            for x in xs:
                budget.spend()
                lhs = (1 + x * x) * poly_eval_horner(p_of[m], x) + shift
                rhs = (x * (1 - x)) ** (4 * m)
                if lhs != rhs:
                    return False, Witness(x=x, m=m, lhs=lhs, rhs=rhs)
        return True, None

    def check_integrand_sign():
        for m in indices:
            scale = medina_scale(m)
            for x in xs:
                budget.spend()
                value = poly_eval_horner(p_of[m], x) - scale / (1 + x * x)
                if value < 0:
                    return False, Witness(x=x, m=m, lhs=value, rhs=Fraction(0))
        return True, None

    def check_final_bound():
        for m in indices:
            bound = Fraction(1, 4 ** (5 * m))
            enclosure_width = bound / 16
            for x in xs:
                budget.spend()
                enc = arctan_enclosure(x, enclosure_width)
                value = poly_eval_horner(h_of[m], x)
                lhs = abs(value - enc.mid) + enc.width / 2
                if lhs > bound:
                    return False, Witness(x=x, m=m, lhs=lhs, rhs=bound)
        return True, None

    def check_round_trip():
        for m in indices:
            budget.spend()
            derived = poly_derivative(poly_antiderivative(p_of[m]))
            if derived != p_of[m]:
                # Witness the first differing coefficient.
                for i in range(max(len(derived), len(p_of[m]))):
                    a = derived[i] if i < len(derived) else Fraction(0)
                    b = p_of[m][i] if i < len(p_of[m]) else Fraction(0)
                    if a != b:
                        return False, Witness(x=None, m=m, lhs=a, rhs=b)
        return True, None

    def check_eval_schemes():
        for m in indices:
            for target in (p_of[m], h_of[m]):
                for x in xs:
                    budget.spend()
                    horner = poly_eval_horner(target, x)
                    powers = poly_eval_powers(target, x)
                    if horner != powers:
                        return False, Witness(x=x, m=m, lhs=horner, rhs=powers)
        return True, None

    lemmas = (
        (
            "L1",
            "x(1-x) <= 1/4 on [0, 1] with equality only at x = 1/2; "
            "1/4 - x(1-x) is the square (x - 1/2)^2",
            check_peak_bound,
        ),
        (
            "L2",
            "the derivative of x(1-x) is 1 - 2x and vanishes at the peak x = 1/2",
            check_peak_slope,
        ),
        (
            "L3",
            "(x(1-x))^{4m} <= 4^{-4m} on [0, 1]",
            check_power_bound,
        ),
        (
            "L4",
            "the integral of x^{4m}(1-x)^{4m} from 0 to x is at most "
            "4^{-4m} x, hence at most 4^{-4m}",
            check_integral_bound,
        ),
        (
            "L5",
            "(1 + x^2) p_m(x) + (-4)^m equals x^{4m}(1-x)^{4m} identically",
            check_closed_identity,
        ),
        (
            "L6",
            "p_m(x) - ((-1)^{m+1} 4^m)/(1 + x^2) >= 0 on [0, 1]",
            check_integrand_sign,
        ),
        (
            "L7",
            "|h_m(x) - arctan(x)| <= 4^{-5m} on [0, 1], decided against "
            "enclosures of width 4^{-5m-2}",
            check_final_bound,
        ),
        (
            "L8",
            "differentiating the antiderivative of p_m gives back p_m "
            "coefficient for coefficient",
            check_round_trip,
        ),
        (
            "L9",
            "Horner and explicit-powers evaluation agree on p_m and h_m "
            "at every grid point",
            check_eval_schemes,
        ),
    )

    checks: list[LemmaCheck] = []
    for lemma_id, description, runner in lemmas:
        try:
            passed, witness = runner()
        except _BudgetExhausted:
            partial = VerificationReport(
                checks=tuple(checks), grid_size=grid_n, m_max=m_max
            )
            raise WorkLimitExceeded(
                f"work limit {limit} exhausted during {lemma_id} "
                f"({len(checks)} of {len(lemmas)} checks completed)",
                partial,
            ) from None
        checks.append(
            LemmaCheck(
                id=lemma_id, description=description, passed=passed, witness=witness
            )
        )
    return VerificationReport(checks=tuple(checks), grid_size=grid_n, m_max=m_max)


def corrupted_seed() -> Poly:
    """medina_p1 with the x^2 coefficient's sign flipped; breaks the identity."""
    seed = list(medina_p1())
    seed[2] = -seed[2]
    return poly(seed)
