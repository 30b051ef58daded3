"""Certification of the inverse-tail inequalities at concrete points.

Every claim compares ``X**-1`` (``X = A_{n,s}`` for even ``n``, ``B_{n,s}`` for
odd ``n``) or ``zeta_n(s)**-1`` against expressions ``2 (n - c)**s``.  A claim
is reported as holding only when the enclosures are disjoint in the required
direction; overlap after one refinement cycle is ``INCONCLUSIVE``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .enclosure import Enclosure, as_rational, enc_exact, enc_pow
from .errors import EpsilonOutOfRange, ParityError, ZetaTailError
from .tails import (
    GUARD_BITS,
    OracleConfig,
    TailQuery,
    ab_value,
    eta_factor,
    inverse_enclosure,
    zeta_tail,
)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
THREE_EIGHTHS = Fraction(3, 8)
THIRD = Fraction(1, 3)


class ClaimKind(str, Enum):
    COARSE = "coarse"
    LOWER = "lower"
    UPPER = "upper"
    COMBINED = "combined"
    ZETA_FORM = "zeta"
    EPSILON_TIGHT = "epsilon"
    REFINED_THIRD = "third"


class Status(str, Enum):
    HOLDS = "CertifiedHolds"
    FAILS = "CertifiedFails"
    INCONCLUSIVE = "Inconclusive"


def _check_eps(eps) -> Fraction:
    eps = as_rational(eps)
    if not 0 < eps < HALF:
        raise EpsilonOutOfRange(f"epsilon must lie in (0, 1/2), got {eps}")
    return eps


@dataclass(frozen=True)
class BoundClaim:
    kind: ClaimKind
    eps: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", ClaimKind(self.kind))
        if self.kind is ClaimKind.EPSILON_TIGHT:
            object.__setattr__(self, "eps", _check_eps(self.eps if self.eps is not None else 0))
        elif self.eps is not None:
            raise ValueError(f"{self.kind.value} takes no epsilon")

    def offsets(self) -> tuple[Fraction | None, Fraction | None]:
        """Offsets ``(c_lo, c_hi)`` so the A-side claim reads ``2(n-c_lo)**s < A**-1 < 2(n-c_hi)**s``."""
        k = self.kind
        if k is ClaimKind.COARSE:
            return Fraction(1), Fraction(0)
        if k is ClaimKind.LOWER:
            return HALF, None
        if k is ClaimKind.UPPER:
            return None, QUARTER
        if k in (ClaimKind.COMBINED, ClaimKind.ZETA_FORM):
            return HALF, QUARTER
        if k is ClaimKind.EPSILON_TIGHT:
            return HALF, HALF - self.eps
        return None, THREE_EIGHTHS

    @property
    def label(self) -> str:
        if self.kind is ClaimKind.EPSILON_TIGHT:
            return f"epsilon({self.eps})"
        return self.kind.value


@dataclass
class BoundReport:
    claim: BoundClaim
    n: int
    s: Fraction
    status: Status
    lhs: Enclosure | None = None
    middle: Enclosure | None = None
    rhs: Enclosure | None = None
    bits: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def widths(self) -> dict[str, float]:
        return {name: float(e.width) for name, e in
                (("lhs", self.lhs), ("middle", self.middle), ("rhs", self.rhs)) if e is not None}


def _power_bound(n: int, c: Fraction, s: Fraction, prec: int) -> Enclosure:
    """Enclose ``2 (n - c)**s``; a zero base gives exactly zero."""
    base = n - c
    if base == 0:
        return enc_exact(0, prec)
    return 2 * enc_pow(enc_exact(base, prec), enc_exact(s, prec))


def _side_status(low: Enclosure, high: Enclosure, strict: bool) -> Status:
    """Decide ``low < high`` (or ``<=`` when not strict)."""
    if strict:
        if low.strictly_below(high):
            return Status.HOLDS
        if high.below_or_touching(low):
            return Status.FAILS
    else:
        if low.below_or_touching(high):
            return Status.HOLDS
        if high.strictly_below(low):
            return Status.FAILS
    return Status.INCONCLUSIVE


def _combine(statuses: list[Status]) -> Status:
    if Status.FAILS in statuses:
        return Status.FAILS
    if all(st is Status.HOLDS for st in statuses):
        return Status.HOLDS
    return Status.INCONCLUSIVE


def _evaluate(claim: BoundClaim, n: int, s: Fraction, cfg: OracleConfig) -> BoundReport:
    prec = cfg.precision.bits
    odd = n % 2 == 1
    c_lo, c_hi = claim.offsets()
    notes = []

    if claim.kind is ClaimKind.ZETA_FORM:
        middle = inverse_enclosure(zeta_tail(TailQuery(n, s), cfg))
        # zeta_n(s)**-1 = -(1 - 2**(1-s)) X**-1, and -(1 - 2**(1-s)) > 0.
        scale = -eta_factor(s, prec + GUARD_BITS)
        notes.append("windows scaled by 2**(1-s) - 1 > 0; zeta_n(s)**-1 has the sign of (-1)**n")
    else:
        middle = inverse_enclosure(ab_value(n, s, cfg))
        scale = None

    def bound(c):
        if c is None:
            return None
        b = _power_bound(n, c, s, prec + GUARD_BITS)
        return b * scale if scale is not None else b

    lower, upper = bound(c_lo), bound(c_hi)
    # The B-side mirrors the A-side: -upper < B**-1 < -lower.
    if odd:
        lower, upper = (-upper if upper is not None else None), (-lower if lower is not None else None)

    strict_lower = strict_upper = True
    if claim.kind is ClaimKind.EPSILON_TIGHT and odd:
        strict_upper = False
        notes.append("odd-n upper side is the non-strict B**-1 <= -2(n-1/2)**s")
    if claim.kind is ClaimKind.COARSE and n == 1:
        notes.append("n = 1: the bound 2(n-1)**s is 0, so the claim reads B**-1 < 0")

    statuses = []
    if lower is not None:
        statuses.append(_side_status(lower, middle, strict_lower))
    if upper is not None:
        statuses.append(_side_status(middle, upper, strict_upper))
    return BoundReport(claim, n, s, _combine(statuses), lower, middle, upper, prec, notes)


def check_bound(claim: BoundClaim, n: int, s, cfg: OracleConfig | None = None) -> BoundReport:
    """Certify one claim at ``(n, s)``.

    Inconclusive outcomes trigger a single refinement (doubled precision,
    tighter width); a second overlap is reported as ``INCONCLUSIVE``.
    """
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    s = as_rational(s)
    if not 0 < s < 1:
        raise ValueError(f"s must lie in (0, 1), got {s}")
    if claim.kind is ClaimKind.REFINED_THIRD and s != THIRD:
        raise ValueError("the refined upper bound is stated for s = 1/3 only")
    cfg = cfg or OracleConfig()
    report = None
    for attempt in range(2):
        try:
            report = _evaluate(claim, n, s, cfg)
        except ZetaTailError as exc:
            if isinstance(exc, ParityError):
                raise
            report = BoundReport(claim, n, s, Status.INCONCLUSIVE, bits=cfg.precision.bits,
                                 notes=[f"{type(exc).__name__}: {exc}"])
        if report.status is not Status.INCONCLUSIVE:
            break
        if attempt == 0:
            cfg = cfg.refined()
    return report


def sweep_bounds(claim: BoundClaim, n_range, s_list, cfg: OracleConfig | None = None) -> list[BoundReport]:
    """One report per ``(n, s)``, n-major.  Per-point failures never abort the sweep."""
    out = []
    s_values = [as_rational(s) for s in s_list]
    for n in n_range:
        for s in s_values:
            try:
                out.append(check_bound(claim, n, s, cfg))
            except (ZetaTailError, ValueError) as exc:
                out.append(BoundReport(claim, int(n), s, Status.INCONCLUSIVE,
                                       notes=[f"{type(exc).__name__}: {exc}"]))
    return out


def h_tight(x: float, s: float, eps: float) -> float:
    """Float value of the ratio ``((1/2-e)/(1/2+e)) ((2x+1/2+e)/(2x-1/2+e))**(s+2)``."""
    return (0.5 - eps) / (0.5 + eps) * ((2 * x + 0.5 + eps) / (2 * x - 0.5 + eps)) ** (s + 2)


def epsilon_threshold(s, eps) -> float:
    """Crossing point ``x0`` past which the ratio ``h`` stays below 1.

    Solving ``h(x) = 1`` with ``r = ((1/2+e)/(1/2-e))**(1/(s+2))`` gives
    ``x0 = ((1+r)/2 + e(1-r)) / (2(r-1))``; ``h`` decreases in ``x``, so
    ``h(x) < 1`` for every ``x > x0``.
    """
    s = as_rational(s)
    if not 0 < s < 1:
        raise ValueError(f"s must lie in (0, 1), got {s}")
    e = _check_eps(eps)
    ef = float(e)
    # r - 1 computed directly so tiny eps keeps its digits.
    rm1 = math.expm1(math.log1p(2 * ef / (0.5 - ef)) / (float(s) + 2))
    r = 1 + rm1
    return ((1 + r) / 2 + ef * (1 - r)) / (2 * rm1)


def aligned_even_bound(x0: float) -> int:
    """Even ``n0`` such that every even ``n >= n0`` has ``n/2 > x0``, with one step to spare."""
    return 2 * math.ceil(x0) + 2
