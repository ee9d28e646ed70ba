"""Sequence construction: frozen landmarks, degree laws, both build routes."""

from fractions import Fraction

import pytest

from conftest import REF_ARCTAN_1, REF_ARCTAN_HALF
from medina_arctan.medina import (
    MedinaPair,
    medina_closed_numerator,
    medina_error_bound,
    medina_h,
    medina_min_m_for,
    medina_p1,
    medina_p_closed,
    medina_p_recurrence,
    medina_pair,
    medina_scale,
    window_poly,
)
from medina_arctan.oracle import arctan_enclosure
from medina_arctan.poly_core import (
    degree,
    poly,
    poly_divmod,
    poly_eval_horner,
    poly_to_strings,
)


def test_seed_polynomial():
    p1 = medina_p1()
    assert p1 == poly([4, 0, -4, 0, 5, -4, 1])
    assert poly_eval_horner(p1, 0) == 4
    assert poly_eval_horner(p1, 1) == 2


def test_recurrence_small_indices():
    assert medina_p_recurrence(1) == medina_p1()
    p2 = medina_p_recurrence(2)
    assert degree(p2) == 14
    assert p2[0] == -16  # constant term from (-4) * 4
    assert p2[-1] == 1
    assert degree(medina_p_recurrence(3)) == 22


def test_closed_form_matches_recurrence():
    for m in range(1, 11):
        assert medina_p_closed(m) == medina_p_recurrence(m)
        _, remainder = poly_divmod(medina_closed_numerator(m), poly([1, 0, 1]))
        assert remainder == ()


def test_degree_law():
    for m in range(1, 11):
        assert degree(medina_p_recurrence(m)) == 8 * m - 2
        assert degree(medina_h(m)) == 8 * m - 1


def test_scale_values():
    assert medina_scale(1) == 4
    assert medina_scale(2) == -16
    assert medina_scale(3) == 64


def test_first_approximant():
    h1 = medina_h(1)
    assert h1 == poly([0, 1, 0, "-1/3", 0, "1/4", "-1/6", "1/28"])
    # 1 - 1/3 + 1/4 - 1/6 + 1/28 = 66/84
    assert poly_eval_horner(h1, 1) == Fraction(11, 14)


def test_approximants_anchored_at_zero():
    for m in range(1, 7):
        assert poly_eval_horner(medina_h(m), 0) == 0


def test_error_bound_values():
    assert medina_error_bound(1) == Fraction(1, 1024)
    assert medina_error_bound(2) == Fraction(1, 1048576)
    for m in range(1, 8):
        assert medina_error_bound(m + 1) == medina_error_bound(m) / 1024


def test_min_m_for():
    assert medina_min_m_for(Fraction(1, 1000)) == 1  # 1/1024 <= 1/1000
    assert medina_min_m_for(Fraction(1, 2000)) == 2
    assert medina_min_m_for(1) == 1
    assert medina_min_m_for("1e-9") == 3
    with pytest.raises(ValueError):
        medina_min_m_for(0)


@pytest.mark.parametrize("bad", [0, -3, True, "2"])
def test_index_validation(bad):
    with pytest.raises(ValueError):
        medina_p_recurrence(bad)
    with pytest.raises(ValueError):
        medina_h(bad)


def test_endpoint_values():
    # From the closed form: p_m(0) = -(-4)^m and 2 p_m(1) = -(-4)^m.
    for m in range(2, 11):
        shift = Fraction((-4) ** m)
        assert poly_eval_horner(medina_p_recurrence(m), 0) == -shift
        assert 2 * poly_eval_horner(medina_p_recurrence(m), 1) == -shift


def test_algebraic_rearrangement_on_grid():
    for m in range(1, 7):
        p = medina_p_recurrence(m)
        shift = Fraction((-4) ** m)
        for k in range(17):
            x = Fraction(k, 16)
            assert (1 + x * x) * poly_eval_horner(p, x) + shift == (
                x * (1 - x)
            ) ** (4 * m)


def test_scaled_integrand_nonnegative_on_grid():
    for m in range(1, 7):
        p = medina_p_recurrence(m)
        scale = medina_scale(m)
        for k in range(17):
            x = Fraction(k, 16)
            assert poly_eval_horner(p, x) - scale / (1 + x * x) >= 0


def test_defect_sign_alternates_with_index():
    # h_m overshoots arctan for odd m and undershoots for even m on (0, 1].
    for m in range(1, 4):
        width = Fraction(1, 4 ** (5 * m + 10))
        for x in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)):
            value = poly_eval_horner(medina_h(m), x)
            enc = arctan_enclosure(x, width)
            if m % 2:
                assert value > enc.hi
            else:
                assert value < enc.lo


def test_window_poly():
    assert window_poly(1) == poly([0, 0, 0, 0, 1, -4, 6, -4, 1])
    assert degree(window_poly(3)) == 24


def test_pair_bundle_and_json():
    pair = medina_pair(1)
    assert pair == MedinaPair(
        m=1, p=medina_p1(), h=medina_h(1), bound=Fraction(1, 1024)
    )
    doc = pair.to_json()
    assert doc == {
        "m": 1,
        "p": ["4", "0", "-4", "0", "5", "-4", "1"],
        "h": ["0", "1", "0", "-1/3", "0", "1/4", "-1/6", "1/28"],
        "bound": "1/1024",
    }
    assert medina_pair(4, closed=True).p == medina_pair(4).p


def test_first_approximant_accuracy_landmarks():
    # |h_1 - arctan| at two reference points, against frozen 40-digit values.
    bound = medina_error_bound(1)
    assert abs(poly_eval_horner(medina_h(1), 1) - REF_ARCTAN_1) <= bound
    assert (
        abs(poly_eval_horner(medina_h(1), Fraction(1, 2)) - REF_ARCTAN_HALF) <= bound
    )


def test_serialization_helper_round_trip():
    pair = medina_pair(2)
    assert poly_to_strings(pair.p)[0] == "-16"
