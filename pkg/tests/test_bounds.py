from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetatail import (
    BoundClaim,
    ClaimKind,
    EpsilonOutOfRange,
    Status,
    aligned_even_bound,
    check_bound,
    epsilon_threshold,
    h_tight,
    sweep_bounds,
)

HALF = Fraction(1, 2)


def test_combined_example():
    r = check_bound(BoundClaim(ClaimKind.COMBINED), 2, HALF)
    assert r.status is Status.HOLDS
    assert abs(float(r.lhs) - 2.44948974) < 1e-8
    assert abs(float(r.middle) - 2.53099612) < 1e-8
    assert abs(float(r.rhs) - 2.64575131) < 1e-8
    assert r.lhs.hi_fraction < r.middle.lo_fraction and r.middle.hi_fraction < r.rhs.lo_fraction


def test_coarse_example():
    r = check_bound(BoundClaim(ClaimKind.COARSE), 2, HALF)
    assert r.status is Status.HOLDS
    assert r.lhs.contains(2) and abs(float(r.rhs) - 2.82842712) < 1e-8


def test_refined_third_example():
    r = check_bound(BoundClaim(ClaimKind.REFINED_THIRD), 2, Fraction(1, 3))
    assert r.status is Status.HOLDS and r.lhs is None
    assert abs(float(r.rhs) - 2.35133) < 1e-5


def test_zeta_form_window_is_sign_resolved():
    r = check_bound(BoundClaim(ClaimKind.ZETA_FORM), 3, HALF)
    assert r.status is Status.HOLDS
    # Odd n: zeta_3(1/2) < 0, so the window sits on the negative axis.
    assert abs(float(r.lhs) + 1.37379) < 1e-5
    assert abs(float(r.rhs) + 1.30986) < 1e-5
    assert abs(float(r.middle) + 1.32758) < 1e-5
    assert r.notes
    even = check_bound(BoundClaim(ClaimKind.ZETA_FORM), 2, HALF)
    assert even.status is Status.HOLDS and even.middle.is_positive()


def test_coarse_at_one_degenerates_to_sign():
    r = check_bound(BoundClaim(ClaimKind.COARSE), 1, HALF)
    assert r.status is Status.HOLDS and r.rhs.is_point and r.rhs.contains(0)
    assert any("n = 1" in note for note in r.notes)


def test_epsilon_small_n_may_fail():
    reports = sweep_bounds(BoundClaim(ClaimKind.EPSILON_TIGHT, Fraction(1, 20)), range(2, 5), [HALF])
    assert len(reports) == 3
    assert all(r.status is not Status.INCONCLUSIVE for r in reports)
    assert any(r.status is Status.FAILS for r in reports)


def test_epsilon_odd_side_is_non_strict():
    r = check_bound(BoundClaim(ClaimKind.EPSILON_TIGHT, Fraction(1, 10)), 201, HALF)
    assert r.status is Status.HOLDS
    assert any("non-strict" in note for note in r.notes)


def test_sweep_shape_and_order():
    reports = sweep_bounds(BoundClaim(ClaimKind.COMBINED), range(2, 101),
                           [Fraction(1, 4), HALF, Fraction(3, 4)])
    assert len(reports) == 99 * 3
    assert [(r.n, r.s) for r in reports[:4]] == [(2, Fraction(1, 4)), (2, HALF), (2, Fraction(3, 4)),
                                               (3, Fraction(1, 4))]
    assert all(r.status is Status.HOLDS for r in reports)
    assert sweep_bounds(BoundClaim(ClaimKind.COMBINED), range(2, 10), []) == []


def test_claim_validation():
    for eps in (0, HALF, Fraction(-1, 10), Fraction(6, 10)):
        with pytest.raises(EpsilonOutOfRange):
            BoundClaim(ClaimKind.EPSILON_TIGHT, eps)
    with pytest.raises(ValueError):
        BoundClaim(ClaimKind.COMBINED, Fraction(1, 10))
    with pytest.raises(ValueError):
        check_bound(BoundClaim(ClaimKind.REFINED_THIRD), 2, HALF)
    with pytest.raises(ValueError):
        check_bound(BoundClaim(ClaimKind.COMBINED), 2, 2)


def test_threshold_brackets_crossing():
    for eps, rel in ((1e-6, 0.01), (0.1, None)):
        x0 = epsilon_threshold(0.5, eps)
        if rel:
            assert h_tight(x0 * (1 + rel), 0.5, eps) < 1 < h_tight(x0 * (1 - rel), 0.5, eps)
        else:
            assert h_tight(x0 + 0.01, 0.5, eps) < 1 < h_tight(x0 - 0.01, 0.5, eps)
    # Small eps: x0 grows like (s + 2)/(8 eps).
    assert abs(epsilon_threshold(0.5, 1e-6) * 8e-6 / 2.5 - 1) < 0.01


def test_threshold_errors_and_alignment():
    with pytest.raises(EpsilonOutOfRange):
        epsilon_threshold(0.5, 0.5)
    with pytest.raises(EpsilonOutOfRange):
        epsilon_threshold(0.5, 0)
    assert epsilon_threshold(0.25, 0.01) > epsilon_threshold(0.25, 0.1)
    assert aligned_even_bound(3.04) == 10
    assert aligned_even_bound(3.0) == 8


crit_s = st.fractions(min_value=Fraction(1, 20), max_value=Fraction(19, 20), max_denominator=40)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=2000), crit_s)
def test_combined_implies_coarse(n, s):
    combined = check_bound(BoundClaim(ClaimKind.COMBINED), n, s)
    assert combined.status is Status.HOLDS
    if n % 2 == 0:
        assert combined.middle.lo_fraction > combined.lhs.hi_fraction
        assert combined.middle.hi_fraction < combined.rhs.lo_fraction
    assert check_bound(BoundClaim(ClaimKind.COARSE), n, s).status is Status.HOLDS


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=1000), crit_s)
def test_zeta_window_sign(n, s):
    r = check_bound(BoundClaim(ClaimKind.ZETA_FORM), n, s)
    assert r.status is Status.HOLDS
    assert r.middle.is_positive() if n % 2 == 0 else r.middle.is_negative()


@settings(max_examples=30, deadline=None)
@given(crit_s, st.fractions(min_value=Fraction(1, 1000), max_value=Fraction(49, 100), max_denominator=1000),
       st.integers(min_value=0, max_value=20))
def test_epsilon_holds_past_threshold(s, eps, k):
    x0 = epsilon_threshold(s, eps)
    n = aligned_even_bound(x0) + 2 * k
    assert n / 2 > x0 + 1
    assert check_bound(BoundClaim(ClaimKind.EPSILON_TIGHT, eps), n, s).status is Status.HOLDS
