from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetatail import (
    Agree,
    Disagree,
    Method,
    OracleConfig,
    ParityError,
    Precision,
    TailQuery,
    WidthNotReached,
    ZeroStraddle,
    a_value,
    ab_value,
    b_value,
    compare,
    cross_validate,
    cvz_weights,
    enc_exact,
    eta_factor,
    eta_tail,
    inverse_enclosure,
    partial_sums,
    zeta_tail,
)

# Frozen from mpmath at 40 digits: altzeta(s) minus the head of the series,
# and zeta(s, n) for s > 1.
ALTERNATING_TAIL = {
    (1, "1/2"): "0.604898643421630370247265914236",
    (2, "1/2"): "-0.395101356578369629752734085764",
    (3, "1/2"): "0.312005424608177894648110276341",
    (2, "1/3"): "-0.428247166174722335063524318864",
    (7, "1/4"): "0.312857695972593093502250813778",
    (10, "1/10"): "-0.39914616238314725491679752031",
    (101, "9/10"): "0.00788880750255519488252227902009",
    (50, "3/4"): "-0.0267908836107458352188793313543",
}
CRITICAL_TAIL = {
    (1, "1/2"): "-1.46035450880958681288949915252",
    (2, "1/2"): "0.953859053563508235912189571694",
    (3, "1/2"): "-0.75324772762303928848865479041",
    (2, "1/3"): "0.729054135568532552626488755495",
    (7, "1/4"): "-0.45887501594838796345622977511",
    (10, "1/10"): "0.460872693517648745970092069998",
}
ZETA_TAIL = {
    (1, "2"): "1.64493406684822643647241516665",
    (2, "2"): "0.644934066848226436472415166646",
    (3, "3"): "0.0770569031595942853997381615114",
    (10, "4"): "0.00038665021738164473092627522336",
    (4, "5"): "0.00156252880592136666058359345292",
    (829, "6"): "5.12349882579389947669407872636e-16",
    (1, "3/2"): "2.61237534868548834334856756792",
}

NAIVE = OracleConfig(method=Method.NAIVE, target_width=Fraction(1, 1000))


def near(e, text, slack="1e-28"):
    v = Fraction(text)
    tol = abs(v) * Fraction(slack)
    return e.lo_fraction - tol <= v <= e.hi_fraction + tol


@pytest.mark.parametrize("key", sorted(ALTERNATING_TAIL))
def test_alternating_tail_matches_oracle(key):
    n, s = key
    e = eta_tail(n, s)
    assert near(e, ALTERNATING_TAIL[key])
    assert e.width_fraction <= Fraction(1, 10**30)


@pytest.mark.parametrize("key", sorted(ALTERNATING_TAIL))
def test_naive_route_brackets_oracle(key):
    n, s = key
    e = eta_tail(n, s, NAIVE)
    assert near(e, ALTERNATING_TAIL[key], "0")
    assert e.width_fraction <= Fraction(1, 1000)


@pytest.mark.parametrize("key", sorted(CRITICAL_TAIL))
def test_critical_zeta_tail_matches_oracle(key):
    n, s = key
    assert near(zeta_tail(TailQuery(n, s)), CRITICAL_TAIL[key])


@pytest.mark.parametrize("key", sorted(ZETA_TAIL))
@pytest.mark.parametrize("method", [Method.ACCEL, Method.NAIVE])
def test_zeta_tail_above_one(key, method):
    n, s = key
    width = Fraction(1, 10**30) if method is Method.ACCEL else Fraction(1, 10**6)
    v = Fraction(ZETA_TAIL[key])
    if method is Method.NAIVE:
        width = min(width, v / 10**4)
    e = zeta_tail(TailQuery(n, s), OracleConfig(method=method, target_width=width))
    assert near(e, ZETA_TAIL[key], "1e-25")
    assert e.width_fraction <= width


def test_budget_failure_is_an_error():
    cfg = OracleConfig(method=Method.NAIVE, max_terms=2, target_width=Fraction(1, 10**30))
    with pytest.raises(WidthNotReached):
        eta_tail(1, Fraction(1, 2), cfg)


def test_parity_and_signs():
    assert a_value(2, "1/2").is_positive()
    assert b_value(1, "1/2").is_negative()
    with pytest.raises(ParityError):
        a_value(3, "1/2")
    with pytest.raises(ParityError):
        b_value(2, "1/2")
    a = a_value(2, "1/2")
    assert Fraction("0.35355") < a.lo_fraction and a.hi_fraction < Fraction(1, 2)
    binv = inverse_enclosure(b_value(1, "1/2"))
    assert abs(float(binv) + 1.65317) < 1e-5
    assert Fraction("-1.7321") < binv.lo_fraction and binv.hi_fraction < Fraction("-1.4142")


def test_inverse_enclosure():
    e = inverse_enclosure(enc_exact("0.25").hull(enc_exact("0.5")))
    assert e.contains(2) and e.contains(4)
    e = inverse_enclosure(enc_exact("-0.5").hull(enc_exact("-0.25")))
    assert e.contains(-2) and e.contains(-4)
    with pytest.raises(ZeroStraddle):
        inverse_enclosure(enc_exact(-1).hull(enc_exact(1)))
    assert abs(float(inverse_enclosure(a_value(2, "1/2"))) - 2.5309961187) < 1e-9


def test_query_validation():
    assert TailQuery(4, "1/2").form == "A" and TailQuery(5, "1/2").form == "B"
    for bad in ((0, "1/2"), (2, 1), (2, 0), (2, "-1/2")):
        with pytest.raises(ValueError):
            TailQuery(*bad)


def test_cvz_weights_sum_is_chebyshev_value():
    # d = T_M(3) = ((3+sqrt8)**M + (3-sqrt8)**M)/2, an integer recurrence.
    t_prev, t = 1, 3
    for m in range(1, 30):
        weights, d = cvz_weights(m)
        assert d == t and len(weights) == m
        t_prev, t = t, 6 * t - t_prev


def test_cross_validation_examples():
    assert isinstance(cross_validate(2, Fraction(1, 2)), Agree)
    assert isinstance(cross_validate(1, Fraction(1, 3)), Agree)
    fake = compare(enc_exact(0).hull(enc_exact(1)), enc_exact(2).hull(enc_exact(3)))
    assert isinstance(fake, Disagree) and "disjoint" in fake.report()


def test_refined_config_is_tighter():
    cfg = OracleConfig().refined()
    assert cfg.precision.bits == 256 and cfg.target_width < Fraction(1, 10**30)
    with pytest.raises(ValueError):
        OracleConfig(max_terms=1)
    with pytest.raises(ValueError):
        OracleConfig(target_width=0)


crit_s = st.fractions(min_value=Fraction(1, 20), max_value=Fraction(19, 20), max_denominator=60)
small_n = st.integers(min_value=1, max_value=400)


@settings(max_examples=40, deadline=None)
@given(small_n, crit_s)
def test_partial_sums_interleave(n, s):
    sums = partial_sums(n, s, 12)
    limit = eta_tail(n, s)
    sign = 1 if n % 2 else -1
    # Odd-length prefixes overshoot in the direction of the first term.
    for j, p in enumerate(sums):
        if j % 2 == 0:
            assert (p.lo_fraction > limit.hi_fraction) if sign > 0 else (p.hi_fraction < limit.lo_fraction)
        else:
            assert (p.hi_fraction < limit.lo_fraction) if sign > 0 else (p.lo_fraction > limit.hi_fraction)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=300), crit_s)
def test_paired_sums_decrease(m, s):
    # |X_n| is strictly decreasing in n for the paired-difference form.
    n = 2 * m
    here, after, before = abs_ab(n, s), abs_ab(n + 1, s), abs_ab(n - 1, s)
    assert after.hi_fraction < here.lo_fraction < here.hi_fraction < before.lo_fraction


def abs_ab(n, s):
    e = ab_value(n, s)
    return e if e.is_positive() else -e


@settings(max_examples=40, deadline=None)
@given(small_n, crit_s)
def test_first_term_telescopes(n, s):
    head = enc_exact(n).__pow__(-s)
    rest = eta_tail(n + 1, s)
    sign = 1 if n % 2 else -1
    combined = rest + head if sign > 0 else rest - head
    assert combined.intersects(eta_tail(n, s))


@settings(max_examples=40, deadline=None)
@given(small_n, crit_s)
def test_zeta_form_identity_and_sign(n, s):
    z = zeta_tail(TailQuery(n, s))
    check = z * eta_factor(s) + ab_value(n, s)
    assert check.contains_zero()
    assert z.is_positive() if n % 2 == 0 else z.is_negative()


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=60), crit_s)
def test_accelerated_refinement_nests_oracle(n, s):
    coarse = eta_tail(n, s, OracleConfig(precision=Precision(64), target_width=Fraction(1, 10**12)))
    fine = eta_tail(n, s)
    assert coarse.intersects(fine)
    assert fine.width_fraction <= coarse.width_fraction


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=2000), st.sampled_from(["3/2", "2", "3", "4", "5", "6", "7/2"]))
def test_both_routes_agree_above_one(n, s):
    q = TailQuery(n, s)
    naive = zeta_tail(q, OracleConfig(method=Method.NAIVE, target_width=Fraction(1, 10**4)))
    accel = zeta_tail(q)
    assert isinstance(compare(naive, accel), Agree)
    assert accel.width_fraction <= Fraction(1, 10**30)
