"""Certified enclosures of zeta tails and of the paired alternating sums.

For ``0 < s < 1`` the tail from ``n`` is defined through the alternating
series::

    zeta_n(s) = (1 - 2**(1-s))**-1 * sum_{k >= n} (-1)**(k+1) * k**-s

and the paired sums ``A_{n,s}`` (even ``n``) and ``B_{n,s}`` (odd ``n``) both
equal minus the alternating tail.  For ``s > 1`` the tail is the plain sum
``sum_{k >= n} k**-s``.

Two independent evaluation routes are provided:

``Method.ACCEL``
    Cohen--Rodriguez Villegas--Zagier weighting with exact integer
    Chebyshev weights.  Because ``k -> (n+k)**-s`` is a moment sequence of a
    positive measure on ``[0, 1]``, the truncation error is at most
    ``a_0 / T_M(3)``.  For ``s > 1`` this route is a partial sum plus an
    Euler--Maclaurin expansion with a rigorous remainder.

``Method.NAIVE``
    Plain partial sums.  On the alternating side the remainder is bracketed
    using convexity of the terms, which gives width ``(a_M - a_{M+1})/2``.
    For ``s > 1`` the remainder is the integral-test bracket.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from mpmath import bernfrac

from .enclosure import (
    Enclosure,
    Precision,
    as_rational,
    enc_exact,
    enc_pow,
)
from .errors import ParityError, WidthNotReached, ZeroStraddle

GUARD_BITS = 32
_CVZ_RATE = 3 + math.sqrt(8)


class Method(str, Enum):
    NAIVE = "naive"
    ACCEL = "accel"


@dataclass(frozen=True)
class OracleConfig:
    """How hard to work for an enclosure.

    ``target_width`` is an absolute width; it is stored as an exact Fraction.
    """

    method: Method = Method.ACCEL
    precision: Precision = field(default_factory=Precision)
    max_terms: int = 200_000
    target_width: Fraction = Fraction(1, 10**30)

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        object.__setattr__(self, "target_width", as_rational(self.target_width))
        if self.max_terms < 2:
            raise ValueError("max_terms must be at least 2")
        if self.target_width <= 0:
            raise ValueError("target_width must be positive")

    def refined(self) -> OracleConfig:
        """Double the precision and tighten the width target to match."""
        bits = self.precision.bits
        return replace(self, precision=self.precision.doubled(),
                       target_width=self.target_width / 2 ** (bits // 2))


@dataclass(frozen=True)
class TailQuery:
    n: int
    s: Fraction

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        s = as_rational(self.s)
        if s <= 0 or s == 1:
            raise ValueError(f"s must satisfy 0 < s < 1 or s > 1, got {s}")
        object.__setattr__(self, "s", s)

    @property
    def critical(self) -> bool:
        return self.s < 1

    @property
    def form(self) -> str:
        """``"A"`` for even n, ``"B"`` for odd n."""
        return "A" if self.n % 2 == 0 else "B"


@dataclass(frozen=True)
class TailEvaluation:
    enclosure: Enclosure
    terms: int
    method: Method
    bits: int


@dataclass(frozen=True)
class Agree:
    naive: Enclosure
    accel: Enclosure


@dataclass(frozen=True)
class Disagree:
    naive: Enclosure
    accel: Enclosure

    def report(self) -> str:
        return f"disjoint enclosures: naive {self.naive!r} vs accelerated {self.accel!r}"


def _critical_s(s) -> Fraction:
    s = as_rational(s)
    if not 0 < s < 1:
        raise ValueError(f"s must lie in (0, 1), got {s}")
    return s


def _check_n(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    return int(n)


def _inv_power(k: int, s: Fraction, prec: int) -> Enclosure:
    return enc_pow(enc_exact(k, prec), enc_exact(-s, prec))


@lru_cache(maxsize=256)
def cvz_weights(m: int) -> tuple[tuple[int, ...], int]:
    """Integer weights ``(c_0..c_{m-1}, d)`` of the degree-``m`` acceleration.

    With ``P(x) = T_m(1 - 2x) = sum_j (-1)**j e_j x**j`` one has
    ``d = P(-1) = sum_j e_j = T_m(3)`` and ``c_k = sum_{j > k} e_j``; the
    accelerated value is ``sum_k (-1)**k c_k a_k / d``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    e = [1]
    for j in range(1, m + 1):
        num = m * math.factorial(m + j - 1) * 4**j
        den = math.factorial(m - j) * math.factorial(2 * j)
        q, r = divmod(num, den)
        assert r == 0
        e.append(q)
    d = sum(e)
    c = []
    acc = d
    for k in range(m):
        acc -= e[k]
        c.append(acc)
    return tuple(c), d


def _accelerated_sum(n: int, s: Fraction, cfg: OracleConfig) -> TailEvaluation:
    wp = cfg.precision.bits + GUARD_BITS
    a0 = _inv_power(n, s, wp)
    target = cfg.target_width
    ratio = 4 * float(a0.hi) / float(target)
    m = max(1, math.ceil(math.log(ratio) / math.log(_CVZ_RATE))) if ratio > 1 else 1
    if m > cfg.max_terms:
        raise WidthNotReached(f"accelerated sum needs {m} terms > max_terms={cfg.max_terms}")
    c, d = cvz_weights(m)
    acc = enc_exact(0, wp)
    for k in range(m):
        term = _inv_power(n + k, s, wp) * c[k]
        acc = acc - term if k & 1 else acc + term
    value = acc / d
    # |S - S_m| <= S / T_m(3) <= a_0 / d for a moment sequence.
    value = value.widen(enc_exact(a0.hi, wp) / d)
    value = Enclosure(value._lo, value._hi, cfg.precision.bits).widen(0)
    if value.width_fraction > target:
        raise WidthNotReached(f"accelerated width {float(value.width):.3g} > target {float(target):.3g} "
                              f"at {cfg.precision.bits} bits")
    return TailEvaluation(value, m, Method.ACCEL, cfg.precision.bits)


def _naive_sum(n: int, s: Fraction, cfg: OracleConfig) -> TailEvaluation:
    wp = cfg.precision.bits + GUARD_BITS
    target = cfg.target_width
    reach = (float(s) / float(target)) ** (1.0 / (float(s) + 1.0))
    m = max(2, math.ceil(reach) - n + 2) if math.isfinite(reach) else cfg.max_terms + 1
    while True:
        if m > cfg.max_terms:
            raise WidthNotReached(f"partial-sum bracket needs more than max_terms={cfg.max_terms} terms")
        partial = enc_exact(0, wp)
        for k in range(m):
            t = _inv_power(n + k, s, wp)
            partial = partial - t if k & 1 else partial + t
        a_m = _inv_power(n + m, s, wp)
        a_next = _inv_power(n + m + 1, s, wp)
        # Convex decreasing terms: a_m/2 <= R_m <= a_m - a_{m+1}/2.
        rem = Enclosure((a_m * Fraction(1, 2))._lo, (a_m - a_next * Fraction(1, 2))._hi, wp)
        value = partial - rem if m & 1 else partial + rem
        value = Enclosure(value._lo, value._hi, cfg.precision.bits).widen(0)
        if value.width_fraction <= target:
            return TailEvaluation(value, m + 2, Method.NAIVE, cfg.precision.bits)
        m *= 2


@lru_cache(maxsize=1 << 14)
def _alternating_sum(n: int, s: Fraction, cfg: OracleConfig) -> TailEvaluation:
    """Enclose ``sum_{k >= 0} (-1)**k (n+k)**-s``."""
    if cfg.method is Method.ACCEL:
        return _accelerated_sum(n, s, cfg)
    return _naive_sum(n, s, cfg)


def partial_sums(n: int, s, count: int, prec: int = 128) -> list[Enclosure]:
    """Enclosures of the first ``count`` partial sums of the alternating tail from ``n``."""
    n = _check_n(n)
    s = as_rational(s)
    out = []
    acc = enc_exact(0, prec)
    for k in range(n, n + count):
        t = _inv_power(k, s, prec)
        acc = acc + t if k % 2 else acc - t
        out.append(acc)
    return out


def eta_tail_evaluation(n: int, s, cfg: OracleConfig | None = None) -> TailEvaluation:
    n = _check_n(n)
    s = _critical_s(s)
    cfg = cfg or OracleConfig()
    ev = _alternating_sum(n, s, cfg)
    if n % 2 == 0:
        ev = replace(ev, enclosure=-ev.enclosure)
    return ev


def eta_tail(n: int, s, cfg: OracleConfig | None = None) -> Enclosure:
    """Enclose ``sum_{k >= n} (-1)**(k+1) k**-s`` for ``0 < s < 1``."""
    return eta_tail_evaluation(n, s, cfg).enclosure


def a_value(n: int, s, cfg: OracleConfig | None = None) -> Enclosure:
    """``A_{n,s} = (n**-s - (n+1)**-s) + ((n+2)**-s - (n+3)**-s) + ...`` for even ``n``."""
    n = _check_n(n)
    if n % 2:
        raise ParityError(f"A_(n,s) needs even n, got {n}")
    return -eta_tail(n, s, cfg)


def b_value(n: int, s, cfg: OracleConfig | None = None) -> Enclosure:
    """``B_{n,s} = (-n**-s + (n+1)**-s) + ...`` for odd ``n``; always negative."""
    n = _check_n(n)
    if n % 2 == 0:
        raise ParityError(f"B_(n,s) needs odd n, got {n}")
    return -eta_tail(n, s, cfg)


def ab_value(n: int, s, cfg: OracleConfig | None = None) -> Enclosure:
    """``A_{n,s}`` or ``B_{n,s}`` according to the parity of ``n``."""
    return a_value(n, s, cfg) if n % 2 == 0 else b_value(n, s, cfg)


def eta_factor(s, prec: int = 128) -> Enclosure:
    """Enclose ``1 - 2**(1-s)``."""
    s = as_rational(s)
    return 1 - enc_pow(enc_exact(2, prec), enc_exact(1 - s, prec))


@lru_cache(maxsize=None)
def _em_coefficient(j: int, s: Fraction) -> Fraction:
    """``B_{2j}/(2j)! * s(s+1)...(s+2j-2)``."""
    p, q = bernfrac(2 * j)
    rising = Fraction(1)
    for i in range(2 * j - 1):
        rising *= s + i
    return Fraction(int(p), int(q)) / math.factorial(2 * j) * rising


def _power_sum(lo: int, hi: int, s: Fraction, wp: int) -> Enclosure:
    acc = enc_exact(0, wp)
    for k in range(lo, hi):
        acc = acc + _inv_power(k, s, wp)
    return acc


def _zeta_tail_above_one(n: int, s: Fraction, cfg: OracleConfig) -> TailEvaluation:
    wp = cfg.precision.bits + GUARD_BITS
    target = cfg.target_width
    if cfg.method is Method.NAIVE:
        # Integral test: int_N^inf <= sum_{k >= N} <= N**-s + int_N^inf.
        # N**-s <= target/2, solved in logs so tiny targets cannot overflow.
        log_split = (math.log(2 * target.denominator) - math.log(target.numerator)) / float(s)
        if log_split > math.log(n + cfg.max_terms):
            raise WidthNotReached(f"integral bracket needs more than max_terms={cfg.max_terms} terms")
        split = max(n, math.ceil(math.exp(log_split)))
        base = Fraction(split) / (s - 1)
        p = _inv_power(split, s, wp)
        tail = Enclosure((p * base)._lo, (p * (base + 1))._hi, wp)
        value = _power_sum(n, split, s, wp) + tail
        terms = split - n
    else:
        split = max(n, 64)
        while True:
            p = _inv_power(split, s, wp)
            p_hi = p.hi_fraction
            q = Fraction(split) / (s - 1) + Fraction(1, 2)
            radius = None
            prev = math.inf
            for j in range(1, 80):
                c = _em_coefficient(j, s) / Fraction(split) ** (2 * j - 1)
                q += c
                mag = abs(c)
                # Remainder after j corrections is bounded by the last one kept.
                if mag * p_hi <= target / 4:
                    radius = mag
                    break
                if mag > prev:
                    break
                prev = mag
            if radius is not None:
                break
            split *= 2
            if split - n > cfg.max_terms:
                raise WidthNotReached("Euler-Maclaurin bracket exceeded the term budget")
        tail = p * enc_exact(q, wp)
        tail = tail.widen(p * radius)
        value = _power_sum(n, split, s, wp) + tail
        terms = split - n + j
    value = Enclosure(value._lo, value._hi, cfg.precision.bits).widen(0)
    if value.width_fraction > target:
        raise WidthNotReached(f"width {float(value.width):.3g} > target {float(target):.3g}")
    return TailEvaluation(value, terms, cfg.method, cfg.precision.bits)


@lru_cache(maxsize=1 << 12)
def _zeta_tail_cached(q: TailQuery, cfg: OracleConfig) -> TailEvaluation:
    if not q.critical:
        return _zeta_tail_above_one(q.n, q.s, cfg)
    factor = eta_factor(q.s, cfg.precision.bits + GUARD_BITS)
    inner = replace(cfg, target_width=cfg.target_width * abs(factor.hi_fraction) / 2)
    ev = eta_tail_evaluation(q.n, q.s, inner)
    value = ev.enclosure / factor
    value = Enclosure(value._lo, value._hi, cfg.precision.bits).widen(0)
    if value.width_fraction > cfg.target_width:
        raise WidthNotReached(f"zeta tail width {float(value.width):.3g} exceeds target")
    return replace(ev, enclosure=value)


def zeta_tail_evaluation(q: TailQuery, cfg: OracleConfig | None = None) -> TailEvaluation:
    return _zeta_tail_cached(q, cfg or OracleConfig())


def zeta_tail(q: TailQuery, cfg: OracleConfig | None = None) -> Enclosure:
    """Enclose ``zeta_n(s)``.

    For ``0 < s < 1`` the value is ``eta_tail / (1 - 2**(1-s))``; its sign is
    that of ``(-1)**n``.  For ``s > 1`` it is the positive tail sum.
    """
    return zeta_tail_evaluation(q, cfg).enclosure


def inverse_enclosure(e: Enclosure) -> Enclosure:
    if e.contains_zero():
        raise ZeroStraddle("cannot invert an enclosure containing zero")
    return 1 / e


def compare(naive: Enclosure, accel: Enclosure) -> Agree | Disagree:
    if naive.intersects(accel):
        return Agree(naive, accel)
    return Disagree(naive, accel)


def cross_validate(n: int, s, cfg_naive: OracleConfig | None = None,
                   cfg_accel: OracleConfig | None = None) -> Agree | Disagree:
    """Evaluate the alternating tail by both routes and check that they overlap."""
    cfg_naive = cfg_naive or OracleConfig(method=Method.NAIVE, target_width=Fraction(1, 1000))
    cfg_accel = cfg_accel or OracleConfig(method=Method.ACCEL, target_width=Fraction(1, 10**20))
    return compare(eta_tail(n, s, cfg_naive), eta_tail(n, s, cfg_accel))
