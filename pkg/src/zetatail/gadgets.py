"""Auxiliary functions used inside the inequality proofs.

Each bound is reduced to a term-by-term comparison ``f(x) > 0`` with
``f(x) = g(x) - g(x + 1/2)``.  Monotonicity of ``g`` then follows from a
ratio ``h < 1``.  The functions here evaluate ``f``, ``g`` and ``h`` as
certified enclosures so their printed spot values, signs and limits can be
checked directly.

Below, ``t(c) = (2x + c)**-s``.

=========  ==========================================================
F_Lower    ``(t(-1/2) - t(3/2))/2 - (t(0) - t(1))``
G_Lower    ``(t(-1/2) + t(1/2))/2 - t(0)``
F_Upper    ``(t(0) - t(1)) - (t(-1/4) - t(7/4))/2``
G_Upper    ``t(0) - (t(-1/4) + t(3/4))/2``
H_Upper    ``((2x + 3/4)/(2x - 1/4))**(s+2) / 3``
F_Third    F_Upper pattern with offsets -3/8, 13/8 and s = 1/3
G_Third    G_Upper pattern with offsets -3/8, 5/8 and s = 1/3
H_Third    ``(3/5) ((2x + 5/8)/(2x - 3/8))**(7/3)``
F_Tight    F_Upper pattern with offsets -1/2+e, 3/2+e
G_Tight    G_Upper pattern with offsets -1/2+e, 1/2+e
H_Tight    ``((1/2-e)/(1/2+e)) ((2x+1/2+e)/(2x-1/2+e))**(s+2)``
=========  ==========================================================
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .enclosure import DEFAULT_BITS, Enclosure, as_rational, enc_exact, enc_pow
from .errors import DomainError, EpsilonOutOfRange

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


class GadgetKind(str, Enum):
    F_LOWER = "F_Lower"
    G_LOWER = "G_Lower"
    F_UPPER = "F_Upper"
    G_UPPER = "G_Upper"
    H_UPPER = "H_Upper"
    F_THIRD = "F_Third"
    G_THIRD = "G_Third"
    H_THIRD = "H_Third"
    F_TIGHT = "F_Tight"
    G_TIGHT = "G_Tight"
    H_TIGHT = "H_Tight"

    @property
    def family(self) -> str:
        return self.value[0]


_THIRD_KINDS = {GadgetKind.F_THIRD, GadgetKind.G_THIRD, GadgetKind.H_THIRD}
_TIGHT_KINDS = {GadgetKind.F_TIGHT, GadgetKind.G_TIGHT, GadgetKind.H_TIGHT}


@dataclass(frozen=True)
class Gadget:
    kind: GadgetKind
    s: Fraction | None = None
    eps: Fraction | None = None

    def __post_init__(self):
        kind = GadgetKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind in _THIRD_KINDS:
            if self.s is not None and as_rational(self.s) != THIRD:
                raise DomainError(f"{kind.value} is fixed at s = 1/3")
            object.__setattr__(self, "s", THIRD)
        else:
            if self.s is None:
                raise DomainError(f"{kind.value} needs a value of s")
            s = as_rational(self.s)
            # s = 1 is admitted for H_Upper only, as the endpoint of its ratio check.
            if not (0 < s < 1 or (kind is GadgetKind.H_UPPER and s == 1)):
                raise DomainError(f"s = {s} outside (0, 1) for {kind.value}")
            object.__setattr__(self, "s", s)
        if kind in _TIGHT_KINDS:
            eps = as_rational(self.eps if self.eps is not None else 0)
            if not 0 < eps < HALF:
                raise EpsilonOutOfRange(f"epsilon must lie in (0, 1/2), got {eps}")
            object.__setattr__(self, "eps", eps)
        elif self.eps is not None:
            raise DomainError(f"{kind.value} takes no epsilon")

    @property
    def label(self) -> str:
        if self.kind in _THIRD_KINDS:
            return self.kind.value
        if self.kind in _TIGHT_KINDS:
            return f"{self.kind.value}(s={self.s}, eps={self.eps})"
        return f"{self.kind.value}(s={self.s})"


def domain_min(g: Gadget) -> Fraction:
    """Smallest admissible ``x`` (inclusive) for ``g``."""
    if g.kind is GadgetKind.H_UPPER:
        return Fraction(2)
    if g.kind is GadgetKind.H_THIRD:
        return Fraction(3)
    if g.kind in _TIGHT_KINDS:
        # Only positivity of every base 2x - 1/2 + eps is required.
        return (HALF - g.eps) / 2
    return Fraction(1)


def _check_domain(g: Gadget, x: Fraction) -> None:
    lo = domain_min(g)
    if g.kind in _TIGHT_KINDS:
        if x <= lo:
            raise DomainError(f"{g.label} needs x > {lo}, got {x}")
    elif x < lo:
        raise DomainError(f"{g.label} needs x >= {lo}, got {x}")


def _offsets(g: Gadget) -> tuple[Fraction, Fraction, Fraction]:
    """``(left, right_f, right_g)`` shifts of the comparison series."""
    k = g.kind
    if k in (GadgetKind.F_LOWER, GadgetKind.G_LOWER):
        return -HALF, Fraction(3, 2), HALF
    if k in (GadgetKind.F_UPPER, GadgetKind.G_UPPER):
        return Fraction(-1, 4), Fraction(7, 4), Fraction(3, 4)
    if k in (GadgetKind.F_THIRD, GadgetKind.G_THIRD):
        return Fraction(-3, 8), Fraction(13, 8), Fraction(5, 8)
    e = g.eps
    return -HALF + e, Fraction(3, 2) + e, HALF + e


def _ratio_parts(g: Gadget) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """``(coefficient, top shift, bottom shift, exponent)`` of an H gadget."""
    if g.kind is GadgetKind.H_UPPER:
        return THIRD, Fraction(3, 4), Fraction(-1, 4), g.s + 2
    if g.kind is GadgetKind.H_THIRD:
        return Fraction(3, 5), Fraction(5, 8), Fraction(-3, 8), Fraction(7, 3)
    e = g.eps
    return (HALF - e) / (HALF + e), HALF + e, -HALF + e, g.s + 2


def eval_gadget(g: Gadget, x, prec: int = DEFAULT_BITS) -> Enclosure:
    """Certified enclosure of gadget ``g`` at ``x``."""
    x = as_rational(x)
    _check_domain(g, x)
    if g.kind.family == "H":
        coef, top, bottom, power = _ratio_parts(g)
        ratio = enc_exact((2 * x + top) / (2 * x + bottom), prec)
        return coef * enc_pow(ratio, enc_exact(power, prec))

    neg_s = enc_exact(-g.s, prec)

    def t(c):
        return enc_pow(enc_exact(2 * x + c, prec), neg_s)

    left, right_f, right_g = _offsets(g)
    if g.kind is GadgetKind.F_LOWER:
        return (t(left) - t(right_f)) * HALF - (t(0) - t(1))
    if g.kind is GadgetKind.G_LOWER:
        return (t(left) + t(right_g)) * HALF - t(0)
    if g.kind.family == "F":
        return (t(0) - t(1)) - (t(left) - t(right_f)) * HALF
    return t(0) - (t(left) + t(right_g)) * HALF


def eval_gadget_exact(g: Gadget, x) -> Fraction:
    """Exact rational value of an H gadget whose exponent is an integer."""
    if g.kind.family != "H":
        raise DomainError("exact evaluation is available for ratio gadgets only")
    x = as_rational(x)
    _check_domain(g, x)
    coef, top, bottom, power = _ratio_parts(g)
    if power.denominator != 1:
        raise DomainError(f"exponent {power} is not an integer")
    return coef * ((2 * x + top) / (2 * x + bottom)) ** int(power)


def gadget_limit(g: Gadget) -> Fraction:
    """Limit of an H gadget as ``x -> infinity``."""
    if g.kind.family != "H":
        raise DomainError("only ratio gadgets have a documented limit")
    return _ratio_parts(g)[0]


def gadget_limit_check(g: Gadget, x_large) -> Enclosure:
    if g.kind not in (GadgetKind.H_UPPER, GadgetKind.H_THIRD):
        raise DomainError("limit checks are defined for H_Upper and H_Third")
    x_large = as_rational(x_large)
    if x_large < 1000:
        raise DomainError(f"limit check needs x >= 1000, got {x_large}")
    return eval_gadget(g, x_large)


_DEFAULT_RELATION = {"F": "positive", "H": "below_one"}


@dataclass
class ScanReport:
    gadget: Gadget
    relation: str
    points: list[Fraction] = field(default_factory=list)
    fails: list[Fraction] = field(default_factory=list)
    inconclusive: list[Fraction] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.fails and not self.inconclusive


def _decide(e: Enclosure, relation: str) -> bool | None:
    if relation == "positive":
        return True if e.is_positive() else (False if not e.hi_fraction > 0 else None)
    if relation == "negative":
        return True if e.is_negative() else (False if not e.lo_fraction < 0 else None)
    if relation == "below_one":
        return True if e.strictly_below(1) else (False if e.lo_fraction >= 1 else None)
    raise ValueError(f"unknown relation {relation!r}")


def gadget_sign_scan(g: Gadget, x_from, x_to, step, relation: str | None = None,
                     prec: int = DEFAULT_BITS) -> ScanReport:
    """Certify ``relation`` at every grid point ``x_from, x_from + step, ..., <= x_to``.

    F gadgets default to ``"positive"`` and H gadgets to ``"below_one"``;
    G gadgets carry no sign claim and need an explicit relation.
    """
    relation = relation or _DEFAULT_RELATION.get(g.kind.family)
    if relation is None:
        raise ValueError(f"{g.kind.value} has no default relation; pass one explicitly")
    x_from, x_to, step = as_rational(x_from), as_rational(x_to), as_rational(step)
    if step <= 0:
        raise ValueError("step must be positive")
    report = ScanReport(g, relation)
    x = x_from
    while x <= x_to:
        report.points.append(x)
        verdict = _decide(eval_gadget(g, x, prec), relation)
        if verdict is False:
            report.fails.append(x)
        elif verdict is None:
            report.inconclusive.append(x)
        x += step
    return report


def spot_value_checks(prec: int = DEFAULT_BITS) -> list[dict]:
    """Quoted spot values of the gadgets, each checked as ``[value, value + last-digit ulp)``."""
    rows = []
    exact = eval_gadget_exact(Gadget(GadgetKind.H_UPPER, s=1), 2)
    rows.append({"gadget": "H_Upper(s=1)", "x": "2", "expected": "6859/10125",
                 "value": str(exact), "ok": exact == Fraction(6859, 10125)})
    for kind, x, printed in ((GadgetKind.F_THIRD, 1, "0.00053"),
                             (GadgetKind.F_THIRD, 2, "0.00081"),
                             (GadgetKind.H_THIRD, 3, "0.87")):
        e = eval_gadget(Gadget(kind), x, prec)
        lo = Fraction(printed)
        ulp = Fraction(1, 10 ** len(printed.split(".")[1]))
        ok = lo <= e.lo_fraction and e.hi_fraction < lo + ulp
        rows.append({"gadget": kind.value, "x": str(x), "expected": f"[{printed}, {lo + ulp})",
                     "value": f"{float(e):.8f}", "ok": ok})
    return rows
