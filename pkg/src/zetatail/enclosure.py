"""Closed intervals with directed-rounding endpoints.

An :class:`Enclosure` holds two binary floating-point endpoints (mpmath
``libmp`` raw values) such that the exact real it stands for lies in
``[lo, hi]``.  Every operation rounds its lower endpoint toward -inf and its
upper endpoint toward +inf, so containment survives arbitrary chains of
operations.

Elementary functions (``exp``/``log``) are evaluated with guard bits in the
directed mode and then widened outward by a relative ``2**-prec`` pad, which
keeps the result valid even if the library is off by an ulp or two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import mpmath
from mpmath import libmp

from .errors import DivisionByIntervalContainingZero, NonPositiveBase

DEFAULT_BITS = 128
GUARD_BITS = 16

_FLOOR = "f"
_CEIL = "c"
_ZERO = libmp.fzero
_ONE = libmp.fone


@dataclass(frozen=True)
class Precision:
    """Working precision and refinement budget."""

    bits: int = DEFAULT_BITS
    max_refinements: int = 8

    def __post_init__(self):
        if int(self.bits) != self.bits or self.bits < 32:
            raise ValueError(f"precision must be an integer >= 32 bits, got {self.bits!r}")
        if int(self.max_refinements) != self.max_refinements or self.max_refinements < 0:
            raise ValueError("max_refinements must be a non-negative integer")

    def doubled(self) -> Precision:
        return Precision(self.bits * 2, self.max_refinements)


def as_rational(x) -> Fraction:
    """Convert ``x`` to an exact :class:`Fraction`.

    Strings may be rational literals (``"1/3"``) or decimals (``"0.25"``,
    ``"1e-3"``).  Python floats are read through their shortest repr, so
    ``0.1`` means one tenth rather than its binary neighbour.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite value {x!r}")
        return Fraction(repr(x))
    if isinstance(x, Decimal):
        return Fraction(x)
    if isinstance(x, mpmath.mpf):
        p, q = libmp.to_rational(x._mpf_)
        return Fraction(int(p), int(q))
    raise TypeError(f"cannot interpret {type(x).__name__} as a rational number")


def _raw_to_fraction(v) -> Fraction:
    p, q = libmp.to_rational(v)
    return Fraction(int(p), int(q))


def _pad(v, prec, rnd):
    """Move ``v`` outward by ``|v| * 2**-prec`` in the direction of ``rnd``."""
    if v == _ZERO:
        return v
    slack = libmp.mpf_shift(libmp.mpf_abs(v), -prec)
    if rnd == _FLOOR:
        return libmp.mpf_sub(v, slack, prec, _FLOOR)
    return libmp.mpf_add(v, slack, prec, _CEIL)


def _min(a, b):
    return a if libmp.mpf_le(a, b) else b


def _max(a, b):
    return a if libmp.mpf_le(b, a) else b


class Enclosure:
    """Certified closed interval ``[lo, hi]``.

    Arithmetic operators accept other enclosures as well as ints, Fractions
    and rational strings, which are converted exactly (or rounded outward).
    """

    __slots__ = ("_lo", "_hi", "prec")

    def __init__(self, lo, hi, prec: int = DEFAULT_BITS):
        if libmp.mpf_lt(hi, lo):
            raise ValueError("enclosure endpoints out of order")
        self._lo = lo
        self._hi = hi
        self.prec = prec

    # -- views --------------------------------------------------------------
    @property
    def lo(self) -> mpmath.mpf:
        return mpmath.mp.make_mpf(self._lo)

    @property
    def hi(self) -> mpmath.mpf:
        return mpmath.mp.make_mpf(self._hi)

    @property
    def lo_fraction(self) -> Fraction:
        return _raw_to_fraction(self._lo)

    @property
    def hi_fraction(self) -> Fraction:
        return _raw_to_fraction(self._hi)

    @property
    def width(self) -> mpmath.mpf:
        """Upper bound on ``hi - lo``."""
        return mpmath.mp.make_mpf(libmp.mpf_sub(self._hi, self._lo, self.prec, _CEIL))

    @property
    def width_fraction(self) -> Fraction:
        return self.hi_fraction - self.lo_fraction

    @property
    def mid(self) -> mpmath.mpf:
        m = libmp.mpf_shift(libmp.mpf_add(self._lo, self._hi, self.prec + 1, "n"), -1)
        return mpmath.mp.make_mpf(m)

    @property
    def is_point(self) -> bool:
        return self._lo == self._hi

    def __float__(self) -> float:
        return libmp.to_float(libmp.mpf_shift(libmp.mpf_add(self._lo, self._hi, 60, "n"), -1))

    def __repr__(self) -> str:
        lo, hi = decimal_bounds(self, 17)
        return f"Enclosure([{lo}, {hi}])"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Enclosure):
            return NotImplemented
        return self._lo == other._lo and self._hi == other._hi and self.prec == other.prec

    def __hash__(self) -> int:
        return hash((self._lo, self._hi, self.prec))

    # -- predicates ---------------------------------------------------------
    def contains(self, x) -> bool:
        """True if ``x`` (a number or an enclosure) lies inside ``self``."""
        if isinstance(x, Enclosure):
            return libmp.mpf_le(self._lo, x._lo) and libmp.mpf_le(x._hi, self._hi)
        if isinstance(x, mpmath.mpf):
            return libmp.mpf_le(self._lo, x._mpf_) and libmp.mpf_le(x._mpf_, self._hi)
        q = as_rational(x)
        return self.lo_fraction <= q <= self.hi_fraction

    __contains__ = contains

    def contains_zero(self) -> bool:
        return libmp.mpf_le(self._lo, _ZERO) and libmp.mpf_le(_ZERO, self._hi)

    def intersects(self, other: Enclosure) -> bool:
        return libmp.mpf_le(self._lo, other._hi) and libmp.mpf_le(other._lo, self._hi)

    def is_positive(self) -> bool:
        return libmp.mpf_lt(_ZERO, self._lo)

    def is_negative(self) -> bool:
        return libmp.mpf_lt(self._hi, _ZERO)

    def strictly_below(self, other) -> bool:
        """Every point of ``self`` is < every point of ``other``."""
        other = _coerce(other, self.prec)
        return libmp.mpf_lt(self._hi, other._lo)

    def below_or_touching(self, other) -> bool:
        """Every point of ``self`` is <= every point of ``other``."""
        other = _coerce(other, self.prec)
        return libmp.mpf_le(self._hi, other._lo)

    def hull(self, other: Enclosure) -> Enclosure:
        return Enclosure(_min(self._lo, other._lo), _max(self._hi, other._hi),
                         max(self.prec, other.prec))

    def widen(self, radius) -> Enclosure:
        """Return ``[lo - r, hi + r]`` for a non-negative rational or enclosure ``r``."""
        r = _coerce(radius, self.prec)
        if libmp.mpf_lt(r._lo, _ZERO):
            raise ValueError("radius must be non-negative")
        return Enclosure(libmp.mpf_sub(self._lo, r._hi, self.prec, _FLOOR),
                         libmp.mpf_add(self._hi, r._hi, self.prec, _CEIL), self.prec)

    # -- arithmetic ---------------------------------------------------------
    def __neg__(self) -> Enclosure:
        return Enclosure(libmp.mpf_neg(self._hi), libmp.mpf_neg(self._lo), self.prec)

    def __add__(self, other):
        return enc_add(self, other)

    def __radd__(self, other):
        return enc_add(other, self)

    def __sub__(self, other):
        return enc_sub(self, other)

    def __rsub__(self, other):
        return enc_sub(other, self)

    def __mul__(self, other):
        return enc_mul(self, other)

    def __rmul__(self, other):
        return enc_mul(other, self)

    def __truediv__(self, other):
        return enc_div(self, other)

    def __rtruediv__(self, other):
        return enc_div(other, self)

    def __pow__(self, s):
        return enc_pow(self, s)


def enc_exact(x, prec: int = DEFAULT_BITS) -> Enclosure:
    """Enclose a rational number; dyadic values come out as points."""
    if isinstance(x, Enclosure):
        return x
    if isinstance(x, mpmath.mpf):
        v = x._mpf_
        return Enclosure(libmp.mpf_pos(v, prec, _FLOOR), libmp.mpf_pos(v, prec, _CEIL), prec)
    q = as_rational(x)
    p, d = q.numerator, q.denominator
    return Enclosure(libmp.from_rational(p, d, prec, _FLOOR),
                     libmp.from_rational(p, d, prec, _CEIL), prec)


def _coerce(x, prec) -> Enclosure:
    if isinstance(x, Enclosure):
        return x
    return enc_exact(x, prec)


def _pair(a, b):
    if not isinstance(a, Enclosure) and not isinstance(b, Enclosure):
        a = enc_exact(a)
    p = a.prec if isinstance(a, Enclosure) else b.prec
    if isinstance(b, Enclosure):
        p = max(p, b.prec)
    return _coerce(a, p), _coerce(b, p), p


def enc_add(a, b) -> Enclosure:
    a, b, p = _pair(a, b)
    return Enclosure(libmp.mpf_add(a._lo, b._lo, p, _FLOOR),
                     libmp.mpf_add(a._hi, b._hi, p, _CEIL), p)


def enc_sub(a, b) -> Enclosure:
    a, b, p = _pair(a, b)
    return Enclosure(libmp.mpf_sub(a._lo, b._hi, p, _FLOOR),
                     libmp.mpf_sub(a._hi, b._lo, p, _CEIL), p)


def enc_mul(a, b) -> Enclosure:
    a, b, p = _pair(a, b)
    mul = libmp.mpf_mul
    if not libmp.mpf_lt(a._lo, _ZERO) and not libmp.mpf_lt(b._lo, _ZERO):
        return Enclosure(mul(a._lo, b._lo, p, _FLOOR), mul(a._hi, b._hi, p, _CEIL), p)
    if a._lo == a._hi and b._lo == b._hi:
        return Enclosure(mul(a._lo, b._lo, p, _FLOOR), mul(a._lo, b._lo, p, _CEIL), p)
    corners = [(x, y) for x in (a._lo, a._hi) for y in (b._lo, b._hi)]
    lo = hi = None
    for x, y in corners:
        d, u = mul(x, y, p, _FLOOR), mul(x, y, p, _CEIL)
        lo = d if lo is None else _min(lo, d)
        hi = u if hi is None else _max(hi, u)
    return Enclosure(lo, hi, p)


def enc_div(a, b) -> Enclosure:
    a, b, p = _pair(a, b)
    if b.contains_zero():
        raise DivisionByIntervalContainingZero("divisor enclosure contains zero")
    div = libmp.mpf_div
    lo = hi = None
    for x in (a._lo, a._hi):
        for y in (b._lo, b._hi):
            d, u = div(x, y, p, _FLOOR), div(x, y, p, _CEIL)
            lo = d if lo is None else _min(lo, d)
            hi = u if hi is None else _max(hi, u)
    return Enclosure(lo, hi, p)


@lru_cache(maxsize=1 << 16)
def _log_point(v, prec):
    lo = libmp.mpf_log(v, prec + GUARD_BITS, _FLOOR)
    hi = libmp.mpf_log(v, prec + GUARD_BITS, _CEIL)
    if v == _ONE:
        return lo, hi
    return _pad(lo, prec, _FLOOR), _pad(hi, prec, _CEIL)


def _exp_down(v, prec):
    return _pad(libmp.mpf_exp(v, prec + GUARD_BITS, _FLOOR), prec, _FLOOR)


def _exp_up(v, prec):
    return _pad(libmp.mpf_exp(v, prec + GUARD_BITS, _CEIL), prec, _CEIL)


def enc_log(x) -> Enclosure:
    x = _coerce(x, DEFAULT_BITS)
    if not x.is_positive():
        raise NonPositiveBase("logarithm of an enclosure that is not strictly positive")
    lo, _ = _log_point(x._lo, x.prec)
    _, hi = _log_point(x._hi, x.prec)
    return Enclosure(lo, hi, x.prec)


def enc_exp(x) -> Enclosure:
    x = _coerce(x, DEFAULT_BITS)
    return Enclosure(_exp_down(x._lo, x.prec), _exp_up(x._hi, x.prec), x.prec)


def _integer_exponent(s: Enclosure):
    if not s.is_point:
        return None
    q = s.lo_fraction
    return q.numerator if q.denominator == 1 else None


def _int_power(x: Enclosure, m: int) -> Enclosure:
    if x.is_point:
        return enc_exact(x.lo_fraction ** m, x.prec)
    result = enc_exact(1, x.prec)
    base = x
    k = abs(m)
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return enc_div(1, result) if m < 0 else result


@lru_cache(maxsize=1 << 16)
def _pow_cached(x: Enclosure, s: Enclosure) -> Enclosure:
    m = _integer_exponent(s)
    if m is not None:
        return _int_power(x, m)
    if x._lo == _ONE and x._hi == _ONE:
        return enc_exact(1, x.prec)
    return enc_exp(enc_mul(enc_log(x), s))


def enc_pow(x, s) -> Enclosure:
    """Enclose ``{a**t : a in x, t in s}`` for a strictly positive base.

    Integer exponents are computed by exact powering; otherwise the result is
    ``exp(s * log x)``, where monotonicity in each argument means the interval
    product of ``log x`` and ``s`` already covers every corner.
    """
    if isinstance(x, Enclosure):
        p = x.prec
    elif isinstance(s, Enclosure):
        p = s.prec
    else:
        p = DEFAULT_BITS
    x = _coerce(x, p)
    s = _coerce(s, p)
    if not x.is_positive():
        raise NonPositiveBase("enc_pow needs a base enclosure with lo > 0")
    return _pow_cached(x, s)


def enc_inverse(x) -> Enclosure:
    return enc_div(1, x)


@dataclass(frozen=True)
class Determined:
    """The floor of every point of the enclosure is ``value``."""

    value: int


@dataclass(frozen=True)
class Straddles:
    """The enclosure crosses the integer ``boundary``, so its floor is undecided."""

    boundary: int


def enc_floor_status(e: Enclosure) -> Determined | Straddles:
    lo = int(libmp.to_int(libmp.mpf_floor(e._lo)))
    hi = int(libmp.to_int(libmp.mpf_floor(e._hi)))
    if lo == hi:
        return Determined(lo)
    return Straddles(lo + 1)


def _outward_decimal(q: Fraction, digits: int, up: bool) -> str:
    if q == 0:
        return "0"
    sign = "-" if q < 0 else ""
    a = abs(q)
    # Away from zero on the outward side: up for positives, down for negatives.
    away = up != (q < 0)
    e10 = len(str(a.numerator)) - len(str(a.denominator))
    while a < Fraction(10) ** e10:
        e10 -= 1
    while a >= Fraction(10) ** (e10 + 1):
        e10 += 1
    while True:
        v = a * Fraction(10) ** (digits - 1 - e10)
        m = -(-v.numerator // v.denominator) if away else v.numerator // v.denominator
        if m < 10 ** digits:
            break
        e10 += 1
    s = str(m)
    return f"{sign}{s[0]}.{s[1:]}e{e10:+03d}"


def decimal_bounds(e: Enclosure, digits: int = 20) -> tuple[str, str]:
    """Decimal strings for ``lo`` and ``hi`` rounded outward to ``digits`` significant digits."""
    return (_outward_decimal(e.lo_fraction, digits, up=False),
            _outward_decimal(e.hi_fraction, digits, up=True))
