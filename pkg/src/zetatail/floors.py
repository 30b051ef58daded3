"""Closed-form integer parts of inverse tails and their certification.

For ``s`` in ``{1/2, 1/3, 1/4}`` the integer part of ``A_{n,s}**-1`` (even
``n``) or ``B_{n,s}**-1`` (odd ``n``) is ``floor(+-2 (n - 1/2)**s)``.  For
integer ``s`` from 2 to 6 the known polynomial formulas for
``floor(zeta_n(s)**-1)`` are provided with their validity ranges.

``[x]`` is always the floor (greatest integer <= x), also for negative x.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from .bounds import BoundClaim, ClaimKind, Status, check_bound
from .enclosure import (
    Determined,
    Enclosure,
    Precision,
    as_rational,
    enc_exact,
    enc_floor_status,
    enc_pow,
)
from .errors import OutOfValidityRange, UnsupportedS, WidthNotReached
from .tails import OracleConfig, TailQuery, ab_value, eta_factor, inverse_enclosure, zeta_tail

CRITICAL_S = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4))
INTEGER_S = (2, 3, 4, 5, 6)
MIN_N = {2: 1, 3: 1, 4: 2, 5: 4, 6: 829}


class Mode(str, Enum):
    AB = "ab"
    ZETA = "zeta"
    INT = "int"


class FloorStatus(str, Enum):
    CERTIFIED = "Certified"
    MISMATCH = "Mismatch"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class FloorCertificate:
    n: int
    s: Fraction
    mode: Mode
    predicted: int
    oracle: Enclosure | None
    status: FloorStatus
    oracle_floor: int | None = None
    bits: int = 0
    notes: list[str] = field(default_factory=list)


def _critical(s) -> Fraction:
    s = as_rational(s)
    if s not in CRITICAL_S:
        raise UnsupportedS(f"closed-form floors exist only for s in {{1/2, 1/3, 1/4}}, got {s}")
    return s


def _positive_n(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    return int(n)


def _floor_by_refinement(build, precision: Precision) -> int:
    bits = precision.bits
    for _ in range(precision.max_refinements + 1):
        status = enc_floor_status(build(bits))
        if isinstance(status, Determined):
            return status.value
        bits *= 2
    raise WidthNotReached("floor still undetermined after the refinement budget")


def predicted_floor_critical(n: int, s, precision: Precision | None = None) -> int:
    """``floor(2(n-1/2)**s)`` for even ``n``, ``floor(-2(n-1/2)**s)`` for odd ``n``.

    ``2(n-1/2)**s`` is never an integer for these ``s``, so refinement ends.
    """
    n = _positive_n(n)
    s = _critical(s)
    sign = 1 if n % 2 == 0 else -1

    def build(bits):
        return sign * 2 * enc_pow(enc_exact(Fraction(2 * n - 1, 2), bits), enc_exact(s, bits))

    return _floor_by_refinement(build, precision or Precision())


def predicted_floor_zeta_form(n: int, s, precision: Precision | None = None) -> int:
    """``floor((-1)**(n+1) 2(n-1/2)**s)``."""
    n = _positive_n(n)
    s = _critical(s)
    sign = 1 if n % 2 == 1 else -1

    def build(bits):
        return sign * 2 * enc_pow(enc_exact(Fraction(2 * n - 1, 2), bits), enc_exact(s, bits))

    return _floor_by_refinement(build, precision or Precision())


def known_integer_floor(n: int, s: int) -> int:
    """Known closed forms for ``floor(zeta_n(s)**-1)``, ``s = 2..6``."""
    n = _positive_n(n)
    if isinstance(s, bool) or as_rational(s) not in INTEGER_S:
        raise UnsupportedS(f"no closed form for s = {s}")
    s = int(s)
    if n < MIN_N[s]:
        raise OutOfValidityRange(f"the s = {s} formula is stated for n >= {MIN_N[s]}, got n = {n}")
    if s == 2:
        return n - 1
    if s == 3:
        return 2 * n * (n - 1)
    if s == 4:
        return 3 * n**3 - 5 * n**2 + 4 * n - 1 + ((2 * n + 1) * (n - 1)) // 4
    if s == 5:
        return 4 * n**4 - 8 * n**3 + 9 * n**2 - 5 * n + ((n + 1) * (n - 2)) // 3
    r = n % 48
    m = Fraction(n)
    value = (5 * m**5 - Fraction(25, 2) * m**4 + Fraction(75, 4) * m**3
             - Fraction(125, 8) * m**2 + Fraction(185, 48) * m)
    if n % 2 == 0:
        value -= Fraction(5 * r, 48) + (35 - 5 * r) // 48
    else:
        value -= Fraction(5 * r + 18, 48) + (17 - 5 * r) // 48
    if value.denominator != 1:
        raise ArithmeticError(f"s = 6 formula gave a non-integer {value} at n = {n}")
    return int(value)


def _oracle(n: int, s: Fraction, mode: Mode, cfg: OracleConfig) -> Enclosure:
    if mode is Mode.AB:
        return inverse_enclosure(ab_value(n, s, cfg))
    inv = inverse_enclosure(zeta_tail(TailQuery(n, s), cfg))
    if mode is Mode.ZETA:
        return inv / eta_factor(s, cfg.precision.bits + 32)
    return inv


def _prediction(n: int, s: Fraction, mode: Mode) -> int:
    if mode is Mode.AB:
        return predicted_floor_critical(n, s)
    if mode is Mode.ZETA:
        return predicted_floor_zeta_form(n, s)
    return known_integer_floor(n, s)


def _check_mode(s: Fraction, mode: Mode) -> None:
    if mode is Mode.INT:
        if s not in INTEGER_S:
            raise UnsupportedS(f"integer mode needs s in 2..6, got {s}")
    else:
        _critical(s)


def certify_floor(n: int, s, mode: Mode | str = Mode.AB, cfg: OracleConfig | None = None,
                  predicted: int | None = None) -> FloorCertificate:
    """Compare a predicted integer part with a certified oracle enclosure.

    ``predicted`` overrides the closed form, which is how the mismatch path is
    exercised.  Budget exhaustion yields ``INCONCLUSIVE``, never a false
    ``CERTIFIED``.
    """
    n = _positive_n(n)
    s = as_rational(s)
    mode = Mode(mode)
    _check_mode(s, mode)
    if predicted is None:
        predicted = _prediction(n, s, mode)
    cfg = cfg or OracleConfig()
    # Aim the oracle at ~1e-12 absolute width on the inverse, whose size is ~|predicted|.
    scale = Fraction(abs(predicted) + 1) ** 2
    if cfg.target_width * scale > Fraction(1, 10**12):
        cfg = OracleConfig(cfg.method, cfg.precision, cfg.max_terms, Fraction(1, 10**12) / scale)
    oracle = None
    notes = []
    for _ in range(cfg.precision.max_refinements + 1):
        try:
            oracle = _oracle(n, s, mode, cfg)
        except WidthNotReached as exc:
            notes.append(f"{cfg.precision.bits} bits: {exc}")
            cfg = cfg.refined()
            continue
        status = enc_floor_status(oracle)
        if isinstance(status, Determined):
            ok = status.value == predicted
            return FloorCertificate(n, s, mode, predicted, oracle,
                                    FloorStatus.CERTIFIED if ok else FloorStatus.MISMATCH,
                                    status.value, cfg.precision.bits, notes)
        notes.append(f"{cfg.precision.bits} bits: enclosure straddles {status.boundary}")
        cfg = cfg.refined()
    return FloorCertificate(n, s, mode, predicted, oracle, FloorStatus.INCONCLUSIVE,
                            None, cfg.precision.bits, notes)


# -- integer exclusion arguments ----------------------------------------------------

def power_residues(k: int, modulus: int) -> frozenset[int]:
    """``{h**k mod modulus : 0 <= h < modulus}``."""
    return frozenset(pow(h, k, modulus) for h in range(modulus))


def integer_root_floor(values: np.ndarray, k: int) -> np.ndarray:
    """Exact ``floor(v**(1/k))`` for non-negative int64 values below 2**52."""
    values = np.asarray(values, dtype=np.int64)
    r = np.floor(values.astype(np.float64) ** (1.0 / k)).astype(np.int64)
    # Float roots may be off by one either way; correct with exact integer powers.
    r = np.where(r**k > values, r - 1, r)
    r = np.where((r + 1) ** k <= values, r + 1, r)
    return r


def is_perfect_power(values: np.ndarray, k: int) -> np.ndarray:
    values = np.asarray(values, dtype=np.int64)
    return integer_root_floor(values, k) ** k == values


def never_perfect_power(n_max: int) -> dict[str, object]:
    """Exhaustively confirm 4n-2, 8n-4, 16n-8 are not squares, cubes, fourth powers for n <= n_max."""
    n = np.arange(1, n_max + 1, dtype=np.int64)
    out: dict[str, object] = {
        "squares_mod_4": sorted(power_residues(2, 4)),
        "cubes_mod_8": sorted(power_residues(3, 8)),
        "fourth_powers_mod_16": sorted(power_residues(4, 16)),
    }
    for label, k, vals in (("4n-2", 2, 4 * n - 2), ("8n-4", 3, 8 * n - 4), ("16n-8", 4, 16 * n - 8)):
        hits = n[is_perfect_power(vals, k)]
        out[label] = [int(h) for h in hits]
    out["ok"] = (out["squares_mod_4"] == [0, 1] and out["cubes_mod_8"] == [0, 1, 3, 5, 7]
                 and out["fourth_powers_mod_16"] == [0, 1]
                 and not out["4n-2"] and not out["8n-4"] and not out["16n-8"])
    return out


@dataclass
class ExclusionReport:
    s: Fraction
    n_max: int
    ok: bool
    residues: frozenset[int] | None = None
    counterexamples: list[int] = field(default_factory=list)
    candidates: list[int] = field(default_factory=list)
    bound_statuses: dict[int, Status] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)


def exclusion_checks(s, n_max: int, cfg: OracleConfig | None = None) -> ExclusionReport:
    """Re-run the integer-exclusion step that pins each floor.

    * ``s = 1/2``: no integer ``h`` with ``4n-2 < h**2 < 4n-1``.
    * ``s = 1/4``: fourth powers are 0 or 1 mod 16, so none of
      ``16n-7, 16n-6, 16n-5`` is one.
    * ``s = 1/3``: the only cube that could sit in ``(8n-4, 8n-2)`` is
      ``8n-3``; the refined bound ``2(n-3/8)**(1/3)`` is certified at every
      ``n <= n_max`` (mirrored for odd n), which rules it out.
    """
    s = _critical(s)
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    n = np.arange(1, n_max + 1, dtype=np.int64)
    if s == Fraction(1, 2):
        # Smallest h with h**2 > 4n-2, then test h**2 < 4n-1.
        h = integer_root_floor(4 * n - 2, 2) + 1
        bad = n[h * h < 4 * n - 1]
        return ExclusionReport(s, n_max, bad.size == 0, power_residues(2, 4),
                               [int(b) for b in bad])
    if s == Fraction(1, 4):
        res = power_residues(4, 16)
        # 16n-d is congruent to -d mod 16 for every n.
        residue_ok = all((-d) % 16 not in res for d in (7, 6, 5))
        hits = n[is_perfect_power(16 * n - 7, 4) | is_perfect_power(16 * n - 6, 4)
                 | is_perfect_power(16 * n - 5, 4)]
        bad = [int(b) for b in hits]
        return ExclusionReport(s, n_max, residue_ok and res <= {0, 1} and not bad, res, bad)
    # s = 1/3
    res = power_residues(3, 8)
    r = integer_root_floor(8 * n - 4, 3) + 1
    inside = r**3 < 8 * n - 2
    stray = n[inside & (r**3 != 8 * n - 3)]
    candidates = [int(m) for m in n[inside]]
    statuses = {}
    claim = BoundClaim(ClaimKind.REFINED_THIRD)
    for m in range(1, n_max + 1):
        statuses[m] = check_bound(claim, m, s, cfg).status
    notes = []
    if statuses[1] is not Status.HOLDS:
        # 8*1-3 = 5 is not a cube, so n = 1 never needs the refined bound.
        notes.append(f"n = 1 (odd mirror) is {statuses[1].value}; no cube candidate there")
    failed = [m for m, st in statuses.items()
              if st is not Status.HOLDS and (m > 1 or m in candidates)]
    ok = stray.size == 0 and not failed
    return ExclusionReport(s, n_max, ok, res, [int(x) for x in stray] + failed, candidates,
                           statuses, notes)
