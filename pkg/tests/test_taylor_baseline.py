"""Taylor baseline: partial sums, remainder bound, minimal-degree searches."""

from fractions import Fraction

import pytest

from medina_arctan.oracle import arctan_enclosure
from medina_arctan.poly_core import poly, poly_eval_horner
from medina_arctan.taylor_baseline import (
    COMPARISON_COLUMNS,
    DEGREE_CUTOFF,
    DegreeLimitError,
    comparison_row,
    medina_min_m_observed,
    taylor_min_degree,
    taylor_poly,
    taylor_remainder_bound,
)


def test_partial_sum_polynomials():
    assert taylor_poly(1).poly == poly([0, 1])
    assert taylor_poly(5).poly == poly([0, 1, 0, "-1/3", 0, "1/5"])
    assert taylor_poly(5).degree == 5


def test_partial_sum_coefficient_pattern():
    tp = taylor_poly(21).poly
    for i, c in enumerate(tp):
        if i % 2 == 0:
            assert c == 0
        else:
            k = (i - 1) // 2
            assert c == Fraction((-1) ** k, i)


@pytest.mark.parametrize("n", [1, 5, 9])
def test_partial_sums_vanish_at_zero(n):
    assert poly_eval_horner(taylor_poly(n).poly, 0) == 0


@pytest.mark.parametrize("bad", [0, 2, -3, 4, True])
def test_degree_validation(bad):
    with pytest.raises(ValueError):
        taylor_poly(bad)
    with pytest.raises(ValueError):
        taylor_remainder_bound(bad, Fraction(1, 2))


def test_remainder_bound_values():
    assert taylor_remainder_bound(1, 1) == Fraction(1, 3)
    assert taylor_remainder_bound(5, Fraction(1, 2)) == Fraction(1, 896)
    assert taylor_remainder_bound(57, Fraction(19, 20)) == Fraction(19, 20) ** 59 / 59


def test_remainder_bound_domain():
    with pytest.raises(ValueError):
        taylor_remainder_bound(5, 2)
    with pytest.raises(ValueError):
        taylor_remainder_bound(5, Fraction(-1, 10))


def test_min_degree_bound_mode():
    # (1/2)^7/7 = 1/896 is not below 1/1000; (1/2)^9/9 = 1/4608 is.
    assert taylor_min_degree(Fraction(1, 2), Fraction(1, 1000)) == 7
    assert taylor_min_degree(0, "1e-30") == 1


def test_min_degree_oracle_mode():
    assert taylor_min_degree(Fraction(1, 2), Fraction(1, 1000), oracle_mode=True) == 5
    assert taylor_min_degree(0, "1e-9", oracle_mode=True) == 1


def test_min_degree_headline_point():
    # Frozen from the pre-build high-precision run: the degree-55 error at
    # x = 19/20 is 5.037e-4, just above 5e-4, so the search lands on 57.
    assert taylor_min_degree(Fraction(19, 20), Fraction(1, 2000), oracle_mode=True) == 57


def test_min_degree_validation():
    with pytest.raises(ValueError):
        taylor_min_degree(2, Fraction(1, 10))
    with pytest.raises(ValueError):
        taylor_min_degree(Fraction(1, 2), 0)


def test_degree_cutoff_is_a_resource_error():
    # At x = 1 the bound decays like 1/n, so 4^-10 needs n near 10^6.
    with pytest.raises(DegreeLimitError):
        taylor_min_degree(1, Fraction(1, 4**10))


def test_true_value_within_remainder_bound():
    # Certified: |arctan(x) - T_n(x)| <= x^(n+2)/(n+2), with the enclosure
    # width scaled well below the bound being checked.
    for n in (1, 5, 9, 21):
        tp = taylor_poly(n).poly
        for k in range(9):
            x = Fraction(k, 8)
            value = poly_eval_horner(tp, x)
            bound = taylor_remainder_bound(n, x)
            if bound == 0:
                assert value == 0
                continue
            enc = arctan_enclosure(x, bound / 64)
            assert abs(value - enc.mid) + enc.width / 2 <= bound


def test_partial_sums_alternate_around_truth():
    for x in (Fraction(1, 2), Fraction(3, 4), Fraction(1)):
        enc = arctan_enclosure(x, "1e-12")
        for n in (1, 3, 5, 7, 9):
            value = poly_eval_horner(taylor_poly(n).poly, x)
            if n % 4 == 1:
                assert value > enc.hi
            else:
                assert value < enc.lo


def test_observed_index_search():
    assert medina_min_m_observed(Fraction(19, 20), Fraction(1, 2000)) == 1
    # True defects at 1/2, frozen pre-build: 1.2e-7 at m=2, 9.8e-11 at m=3.
    assert medina_min_m_observed(Fraction(1, 2), "1e-9") == 3
    with pytest.raises(ValueError):
        medina_min_m_observed(Fraction(1, 2), 0)


def _effective_taylor_degree(x, eps):
    try:
        return taylor_min_degree(x, eps)
    except DegreeLimitError:
        return None


def test_taylor_never_beats_matched_guarantee():
    # At the accuracy the m-th approximant guarantees, the Taylor degree on
    # [1/2, 1] is never smaller; None means the search passed the cutoff,
    # which exceeds every approximant degree used here.
    for m in range(1, 6):
        eps = Fraction(1, 4 ** (5 * m))
        for x in (Fraction(1, 2), Fraction(5, 8), Fraction(3, 4), Fraction(7, 8), Fraction(1)):
            n = _effective_taylor_degree(x, eps)
            assert n is None or n >= 8 * m - 1


def test_comparison_row_headline():
    row = comparison_row("0.95", "5e-4")
    assert row == {
        "x": "19/20",
        "eps": "1/2000",
        "taylor_min_degree": 57,
        "medina_min_m": 1,
        "medina_degree": 7,
        "taylor_terms_evaluated": 29,
    }
    assert tuple(row) == COMPARISON_COLUMNS


def test_comparison_row_bound_mode():
    row = comparison_row("0.5", "0.001", oracle_mode=False)
    assert row["taylor_min_degree"] == 7
    assert row["medina_min_m"] == 1
    assert row["medina_degree"] == 7
    assert row["taylor_terms_evaluated"] == 4


def test_comparison_row_domain():
    with pytest.raises(ValueError):
        comparison_row(2, "1e-3")


def test_cutoff_constant_is_odd_and_large():
    assert DEGREE_CUTOFF % 2 == 1
    assert DEGREE_CUTOFF > 10**4
