"""End-to-end acceptance checks, one test per criterion.

Each test prints a single PASS/FAIL line; the lines are also collected into
an "acceptance criteria" section of the pytest terminal summary.
"""

import subprocess
import sys
import time
from fractions import Fraction

from zetatail import (
    Agree,
    BoundClaim,
    ClaimKind,
    FloorStatus,
    Gadget,
    GadgetKind,
    Method,
    Mode,
    OracleConfig,
    Status,
    certify_floor,
    cross_validate,
    epsilon_threshold,
    eval_gadget,
    eval_gadget_exact,
    gadget_limit_check,
    known_integer_floor,
    never_perfect_power,
    predicted_floor_critical,
    predicted_floor_zeta_form,
    sweep_bounds,
)

CRITICAL = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4))


def root_floor(n: int, s: Fraction, sign: int) -> int:
    """floor(sign * 2(n-1/2)**s) for s = 1/q by exact integer roots."""
    q = s.denominator
    v = 2 ** (q - 1) * (2 * n - 1)
    r = int(round(v ** (1 / q)))
    while r**q > v:
        r -= 1
    while (r + 1) ** q <= v:
        r += 1
    return r if sign > 0 else -r - 1


def test_criterion_1_critical_floors(verdict):
    bad = []
    for s in CRITICAL:
        for n in range(1, 2001):
            expected = root_floor(n, s, 1 if n % 2 == 0 else -1)
            cert = certify_floor(n, s, Mode.AB)
            if cert.status is not FloorStatus.CERTIFIED or cert.predicted != expected:
                bad.append((n, s, cert.status.value, cert.predicted, expected))
    verdict("1 critical floors, n in [1, 2000] x s in {1/2, 1/3, 1/4}", not bad,
            f"6000 certificates, {len(bad)} not certified")
    assert not bad, bad[:5]


def test_criterion_2_zeta_form(verdict):
    bad = []
    for s in CRITICAL:
        for n in range(1, 501):
            expected = root_floor(n, s, 1 if n % 2 else -1)
            cert = certify_floor(n, s, Mode.ZETA)
            if (cert.status is not FloorStatus.CERTIFIED or cert.oracle_floor != expected
                    or predicted_floor_zeta_form(n, s) != expected):
                bad.append((n, s, cert.status.value, cert.oracle_floor, expected))
    verdict("2 zeta-form floors, n in [1, 500]", not bad, f"1500 certificates, {len(bad)} off")
    assert not bad, bad[:5]


def test_criterion_3_bound_sweeps(verdict):
    start = time.perf_counter()
    s_grid = [Fraction(k, 10) for k in range(1, 10)]
    counts = {}
    for kind in (ClaimKind.COMBINED, ClaimKind.COARSE):
        reports = sweep_bounds(BoundClaim(kind), range(2, 1001), s_grid)
        counts[kind.value] = (len(reports), sum(r.status is Status.HOLDS for r in reports))
    third = sweep_bounds(BoundClaim(ClaimKind.REFINED_THIRD), range(2, 1001, 2), [Fraction(1, 3)])
    counts["third"] = (len(third), sum(r.status is Status.HOLDS for r in third))
    ok = all(total == holds for total, holds in counts.values()) and counts["combined"][0] == 999 * 9
    elapsed = time.perf_counter() - start
    verdict("3 combined/coarse over [2, 1000] x 0.1..0.9, third over even n", ok,
            ", ".join(f"{k} {h}/{t}" for k, (t, h) in counts.items()) + f", {elapsed:.0f}s")
    assert ok, counts


def test_criterion_4_epsilon_tight(verdict):
    failures = []
    checked = 0
    max_width = Fraction(0)
    for s in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
        for eps in (Fraction(1, 100), Fraction(5, 100), Fraction(1, 10)):
            x0 = epsilon_threshold(s, eps)
            claim = BoundClaim(ClaimKind.EPSILON_TIGHT, eps)
            evens = [n for n in range(2, 2001, 2) if n / 2 > x0 + 1]
            for r in sweep_bounds(claim, evens, [s]):
                checked += 1
                # Upper side 2(n - 1/2 + eps)**s, certified by disjointness.
                if r.status is not Status.HOLDS or not r.middle.strictly_below(r.rhs):
                    failures.append((s, eps, r.n, r.status.value))
            g = Gadget(GadgetKind.H_TIGHT, s=s, eps=eps)
            above = eval_gadget(g, Fraction(x0) * Fraction(1001, 1000))
            below = eval_gadget(g, Fraction(x0) * Fraction(999, 1000))
            max_width = max(max_width, above.width_fraction, below.width_fraction)
            if not above.strictly_below(1) or not below.lo_fraction > 1:
                failures.append((s, eps, "h crossing"))
    ok = not failures and checked > 0 and max_width <= Fraction(1, 10**12)
    verdict("4 epsilon-tight upper side past the threshold, h crossing at x0*(1 +- 0.001)", ok,
            f"{checked} even n, max width {float(max_width):.1e}, {len(failures)} failures")
    assert ok, failures[:5]


def test_criterion_5_spot_values(verdict):
    checks = {
        "H_Upper(2, 1) = 6859/10125": eval_gadget_exact(Gadget(GadgetKind.H_UPPER, s=1), 2)
        == Fraction(6859, 10125),
    }
    for kind, x, lo, hi in ((GadgetKind.F_THIRD, 1, "0.00053", "0.00054"),
                            (GadgetKind.F_THIRD, 2, "0.00081", "0.00082"),
                            (GadgetKind.H_THIRD, 3, "0.87", "0.88")):
        e = eval_gadget(Gadget(kind), x)
        checks[f"{kind.value}({x}) in [{lo}, {hi})"] = Fraction(lo) <= e.lo_fraction and e.hi_fraction < Fraction(hi)
    for g, lim in ((Gadget(GadgetKind.H_UPPER, s=Fraction(1, 2)), Fraction(1, 3)),
                   (Gadget(GadgetKind.H_THIRD), Fraction(3, 5))):
        e = gadget_limit_check(g, 10**6)
        checks[f"{g.label} limit {lim}"] = max(abs(e.lo_fraction - lim), abs(e.hi_fraction - lim)) <= Fraction(1, 10**5)
    ok = all(checks.values())
    verdict("5 gadget spot values and limits", ok, ", ".join(k for k, v in checks.items() if not v) or "6/6")
    assert ok, checks


def test_criterion_6_integer_s(verdict):
    ranges = {2: (2, 500), 3: (1, 300), 4: (2, 200), 5: (4, 150), 6: (829, 900)}
    bad, timings = [], {}
    for s, (lo, hi) in ranges.items():
        start = time.perf_counter()
        for n in range(lo, hi + 1):
            cert = certify_floor(n, s, Mode.INT)
            if cert.status is not FloorStatus.CERTIFIED or cert.oracle_floor != known_integer_floor(n, s):
                bad.append((n, s, cert.status.value))
        timings[s] = time.perf_counter() - start
    slow = [s for s, t in timings.items() if t >= 60]
    ok = not bad and not slow
    verdict("6 integer-s closed forms against direct sums with corrected integral tails", ok,
            ", ".join(f"s={s} {t:.1f}s" for s, t in timings.items()) + f", {len(bad)} off")
    assert ok, (bad[:5], timings)


def test_criterion_7_never_perfect_powers(verdict):
    start = time.perf_counter()
    out = never_perfect_power(10**6)
    elapsed = time.perf_counter() - start
    ok = out["ok"] and elapsed < 1.0
    verdict("7 residue tables and no perfect powers for n <= 10**6", ok, f"{elapsed:.3f}s")
    assert ok, (out, elapsed)


def test_criterion_8_cross_validation(verdict):
    naive = OracleConfig(method=Method.NAIVE, target_width=Fraction(1, 1000))
    accel = OracleConfig(method=Method.ACCEL, target_width=Fraction(1, 10**20))
    disagree = []
    for n in range(1, 51):
        for s in ("0.1", "0.25", "0.5", "0.75", "0.9"):
            if not isinstance(cross_validate(n, s, naive, accel), Agree):
                disagree.append((n, s))
    verdict("8 naive and accelerated enclosures intersect on [1, 50] x 5 values of s", not disagree,
            f"250 pairs, {len(disagree)} disjoint")
    assert not disagree


def test_criterion_9_cli_determinism(verdict):
    argv = [sys.executable, "-m", "zetatail", "verify", "combined", "--n-from", "2", "--n-to", "100",
            "--s", "0.5", "--format", "csv"]
    runs = [subprocess.run(argv, capture_output=True, check=False) for _ in range(2)]
    ok = all(r.returncode == 0 for r in runs) and runs[0].stdout == runs[1].stdout and runs[0].stdout
    verdict("9 repeated CLI runs are byte-identical", bool(ok), f"{len(runs[0].stdout)} bytes")
    assert ok


def test_prediction_agrees_with_integer_roots_at_scale():
    # Sanity for criteria 1 and 2: the enclosure-refined predictions equal exact integer roots.
    for s in CRITICAL:
        for n in range(1, 2001):
            assert predicted_floor_critical(n, s) == root_floor(n, s, 1 if n % 2 == 0 else -1)
