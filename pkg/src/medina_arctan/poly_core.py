"""Exact dense polynomial calculus over the rationals.

A polynomial is a tuple of ``Fraction`` coefficients indexed by power:
``coeffs[i]`` is the coefficient of x**i, so ``(3, 0, 1)`` encodes
``3 + x**2``.  The representation is canonical: trailing zero coefficients
are never stored, the zero polynomial is the empty tuple, and its degree is
the sentinel -1.  Canonical tuples make structural equality coincide with
mathematical equality.

Scalars are ``fractions.Fraction`` throughout, which keeps every value
gcd-reduced with a positive denominator.  Nothing here ever rounds, and all
values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

Rational = Fraction
RatLike = Union[int, str, Fraction]
Poly = Tuple[Fraction, ...]

ZERO_POLY: Poly = ()
ONE_POLY: Poly = (Fraction(1),)


def rat(value: RatLike) -> Fraction:
    """Coerce an int, Fraction, or rational string to an exact Fraction.

    Floats are rejected on purpose: they carry binary rounding error and
    would silently break exactness.  Spell decimals as strings; "0.95"
    parses to 19/20 exactly.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return rat_parse(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to an exact rational")


def rat_parse(text: str) -> Fraction:
    """Parse "-3", "19/20", "0.95", or "1e-9" into an exact Fraction.

    Decimal and exponent notation convert exactly.  Malformed text or a zero
    denominator raises ValueError.
    """
    # U+2212 is the typographic minus that tends to arrive via copy-paste.
    cleaned = text.strip().replace("−", "-")
    try:
        return Fraction(cleaned)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in rational {text!r}") from None
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None


def rat_str(value: Fraction) -> str:
    """Render a Fraction as "p/q", or plain "p" when the denominator is 1."""
    return str(value)


def normalize(coeffs: Iterable[Fraction]) -> Poly:
    """Drop trailing zeros so equal polynomials compare equal as tuples."""
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly(coeffs: Iterable[RatLike] = ()) -> Poly:
    """Build a canonical polynomial from low-to-high coefficient values."""
    return normalize(rat(c) for c in coeffs)


def degree(p: Poly) -> int:
    """Degree of p, with the zero polynomial at -1."""
    return len(p) - 1


def poly_eval_horner(p: Poly, x: RatLike) -> Fraction:
    """Evaluate by nested multiplication: c0 + x*(c1 + x*(...))."""
    x = rat(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = c + x * acc
    return acc


def poly_eval_powers(p: Poly, x: RatLike) -> Fraction:
    """Evaluate as the sum of c_i * x**i with independently computed powers.

    Agrees with poly_eval_horner on every input; kept as a second route so
    the two schemes can be checked against each other.
    """
    x = rat(x)
    return sum((c * x**i for i, c in enumerate(p)), Fraction(0))


def poly_add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return normalize(out)


def poly_neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def poly_sub(p: Poly, q: Poly) -> Poly:
    return poly_add(p, poly_neg(q))


def poly_scale(p: Poly, k: RatLike) -> Poly:
    k = rat(k)
    if k == 0:
        return ZERO_POLY
    # k != 0 preserves the nonzero leading coefficient, so no renormalize.
    return tuple(c * k for c in p)


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO_POLY
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    # Leading coefficient is a product of nonzero rationals, already canonical.
    return tuple(out)


def poly_pow(p: Poly, k: int) -> Poly:
    """p**k by repeated squaring; p**0 is the unit polynomial (1,)."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
    result = ONE_POLY
    base = p
    while k:
        if k & 1:
            result = poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result


def poly_derivative(p: Poly) -> Poly:
    """Term-wise power rule; constants collapse to the zero polynomial."""
    # (i+1) * c is nonzero whenever c is, so the result stays canonical.
    return tuple((i + 1) * c for i, c in enumerate(p[1:]))


def poly_antiderivative(p: Poly) -> Poly:
    """The antiderivative anchored at zero: no constant term."""
    if not p:
        return ZERO_POLY
    return (Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(p))


def poly_defint(p: Poly, a: RatLike, b: RatLike) -> Fraction:
    """Exact definite integral of p over [a, b]."""
    anti = poly_antiderivative(p)
    return poly_eval_horner(anti, rat(b)) - poly_eval_horner(anti, rat(a))


def poly_divmod(p: Poly, d: Poly) -> Tuple[Poly, Poly]:
    """Long division: (q, r) with p == q*d + r and deg r < deg d."""
    if not d:
        raise ZeroDivisionError("polynomial division by the zero polynomial")
    if len(p) < len(d):
        return ZERO_POLY, p
    rem = list(p)
    qlen = len(p) - len(d) + 1
    quot = [Fraction(0)] * qlen
    lead = d[-1]
    for shift in range(qlen - 1, -1, -1):
        coeff = rem[shift + len(d) - 1] / lead
        if coeff == 0:
            continue
        quot[shift] = coeff
        for i, dc in enumerate(d):
            rem[shift + i] -= coeff * dc
    return normalize(quot), normalize(rem)


def poly_to_strings(p: Poly) -> List[str]:
    """Serialize as a list of rational strings, index = power (JSON-ready)."""
    return [str(c) for c in p]


def poly_from_strings(items: Sequence[str]) -> Poly:
    """Inverse of poly_to_strings; tolerates non-canonical trailing zeros."""
    return normalize(rat_parse(s) for s in items)
