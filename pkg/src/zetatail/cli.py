"""Command-line front end: ``zetatail {tail,floor,verify,threshold}``.

Machine formats (csv, json) are byte-deterministic for fixed inputs; the
summary line of ``verify`` goes to stderr for those formats so stdout stays
a clean table.

Exit codes: 0 success, 1 invalid arguments, 2 numeric budget failure or
inconclusive floor, 3 floor mismatch.  ``verify`` exits 1 whenever any point
is a certified failure or mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .bounds import BoundClaim, ClaimKind, Status, aligned_even_bound, epsilon_threshold, sweep_bounds
from .enclosure import Enclosure, Precision, as_rational, decimal_bounds
from .errors import WidthNotReached, ZetaTailError
from .floors import (
    CRITICAL_S,
    FloorStatus,
    Mode,
    certify_floor,
    exclusion_checks,
    never_perfect_power,
)
from .gadgets import Gadget, GadgetKind, gadget_limit, gadget_limit_check, gadget_sign_scan, spot_value_checks
from .tails import Method, OracleConfig, TailQuery, eta_tail_evaluation, zeta_tail_evaluation

PREC_ENV = "ZETATAIL_PREC"
DIGITS = 25
NAIVE_WIDTH = Fraction(1, 1000)
# Accelerated default leaves 28 bits of the working precision for rounding slack.
SLACK_BITS = 28

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational or decimal number: {text!r}") from exc


def _bounds(e: Enclosure | None) -> tuple[str, str]:
    if e is None:
        return "", ""
    return decimal_bounds(e, DIGITS)


def _emit(records: list[dict], fmt: str, out_path: str | None) -> None:
    if fmt == "json":
        text = json.dumps(records, indent=2, ensure_ascii=False) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        if records:
            writer = csv.DictWriter(buf, fieldnames=list(records[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(records)
        text = buf.getvalue()
    else:
        if not records:
            text = "(no records)\n"
        else:
            cols = list(records[0])
            rows = [[str(r[c]) for c in cols] for r in records]
            widths = [max(len(c), *(len(row[i]) for row in rows)) for i, c in enumerate(cols)]
            lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
            lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in rows]
            text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _precision(args) -> Precision:
    bits = args.prec
    if bits is None:
        env = os.environ.get(PREC_ENV)
        bits = int(env) if env else Precision().bits
    try:
        return Precision(bits)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _config(args) -> OracleConfig:
    method = Method(args.method)
    precision = _precision(args)
    width = args.width
    if width is None:
        width = NAIVE_WIDTH if method is Method.NAIVE else Fraction(1, 2 ** (precision.bits - SLACK_BITS))
    if width <= 0:
        raise UsageError("--width must be positive")
    return OracleConfig(method=method, precision=precision, target_width=width)


# -- subcommands ----------------------------------------------------------------------

def cmd_tail(args) -> int:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    s = args.s
    if s <= 0 or s == 1:
        raise UsageError("s must satisfy 0 < s < 1 or s > 1")
    cfg = _config(args)
    kind = args.kind
    if kind != "zeta" and s > 1:
        raise UsageError(f"--kind {kind} needs 0 < s < 1")
    try:
        if kind == "zeta":
            ev = zeta_tail_evaluation(TailQuery(args.n, s), cfg)
        else:
            ev = eta_tail_evaluation(args.n, s, cfg)
            if kind == "ab":
                ev = type(ev)(-ev.enclosure, ev.terms, ev.method, ev.bits)
    except WidthNotReached as exc:
        print(f"width not reached: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    label = {"zeta": "zeta_n", "eta": "eta_tail", "ab": "A" if args.n % 2 == 0 else "B"}[kind]
    lo, hi = _bounds(ev.enclosure)
    _emit([{"n": args.n, "s": str(s), "quantity": label, "method": ev.method.value,
            "prec": ev.bits, "terms": ev.terms, "lo": lo, "hi": hi}], args.format, args.out)
    return EXIT_OK


def cmd_floor(args) -> int:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    mode = Mode(args.mode) if args.mode else (Mode.INT if args.s > 1 else Mode.AB)
    cfg = OracleConfig(precision=_precision(args))
    try:
        cert = certify_floor(args.n, args.s, mode, cfg)
    except ZetaTailError as exc:
        if isinstance(exc, WidthNotReached):
            print(str(exc), file=sys.stderr)
            return EXIT_NUMERIC
        raise UsageError(str(exc)) from exc
    lo, hi = _bounds(cert.oracle)
    _emit([{"n": cert.n, "s": str(cert.s), "mode": cert.mode.value, "predicted": cert.predicted,
            "oracle_floor": "" if cert.oracle_floor is None else cert.oracle_floor,
            "status": cert.status.value, "prec": cert.bits, "lo": lo, "hi": hi}],
          args.format, args.out)
    if cert.status is FloorStatus.MISMATCH:
        print(f"MISMATCH at n={cert.n}, s={cert.s}: predicted {cert.predicted}, "
              f"oracle floor {cert.oracle_floor}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK if cert.status is FloorStatus.CERTIFIED else EXIT_NUMERIC


def _bound_records(reports) -> list[dict]:
    rows = []
    for r in reports:
        lhs, mid, rhs = _bounds(r.lhs), _bounds(r.middle), _bounds(r.rhs)
        rows.append({"claim": r.claim.label, "n": r.n, "s": str(r.s), "status": r.status.value,
                     "lhs_lo": lhs[0], "lhs_hi": lhs[1], "mid_lo": mid[0], "mid_hi": mid[1],
                     "rhs_lo": rhs[0], "rhs_hi": rhs[1], "prec": r.bits, "notes": "; ".join(r.notes)})
    return rows


def _verify_exclusions(args, s_values, cfg) -> tuple[list[dict], int]:
    n_max = args.n_to if args.n_to is not None else 100
    rows, failures = [], 0
    for s in s_values:
        rep = exclusion_checks(s, n_max, cfg)
        failures += not rep.ok
        rows.append({"check": "exclusion", "s": str(s), "n_max": n_max, "ok": rep.ok,
                     "residues": " ".join(map(str, sorted(rep.residues or ()))),
                     "detail": "candidates=" + " ".join(map(str, rep.candidates))
                     + ("; counterexamples=" + " ".join(map(str, rep.counterexamples))
                        if rep.counterexamples else "")
                     + ("; " + "; ".join(rep.notes) if rep.notes else "")})
    powers = never_perfect_power(max(n_max, 10**6))
    failures += not powers["ok"]
    rows.append({"check": "never_perfect_power", "s": "", "n_max": max(n_max, 10**6),
                 "ok": powers["ok"],
                 "residues": "sq4=" + ",".join(map(str, powers["squares_mod_4"]))
                 + " cu8=" + ",".join(map(str, powers["cubes_mod_8"]))
                 + " fo16=" + ",".join(map(str, powers["fourth_powers_mod_16"])),
                 "detail": ""})
    return rows, failures


def _verify_gadgets(s_values) -> tuple[list[dict], int, int]:
    rows, failures, inconclusive = [], 0, 0
    for spot in spot_value_checks():
        failures += not spot["ok"]
        rows.append({"check": "spot", "gadget": spot["gadget"], "x": spot["x"],
                     "ok": spot["ok"], "detail": f"value {spot['value']} expected {spot['expected']}"})
    scans = [(Gadget(GadgetKind.F_THIRD), 1, 50, Fraction(1, 2)),
             (Gadget(GadgetKind.H_THIRD), 3, 100, 1),
             (Gadget(GadgetKind.H_UPPER, s=Fraction(9, 10)), 2, 100, 1)]
    for s in s_values:
        scans.append((Gadget(GadgetKind.F_LOWER, s=s), 1, 50, Fraction(1, 2)))
        scans.append((Gadget(GadgetKind.F_UPPER, s=s), 1, 50, Fraction(1, 2)))
    for g, a, b, step in scans:
        rep = gadget_sign_scan(g, a, b, step)
        failures += len(rep.fails)
        inconclusive += len(rep.inconclusive)
        rows.append({"check": f"scan:{rep.relation}", "gadget": g.label, "x": f"[{a}, {b}] step {step}",
                     "ok": rep.ok, "detail": f"{len(rep.points)} points, {len(rep.fails)} fails, "
                                             f"{len(rep.inconclusive)} inconclusive"})
    for g in (Gadget(GadgetKind.H_UPPER, s=Fraction(1, 2)), Gadget(GadgetKind.H_THIRD)):
        x = 10**6
        e = gadget_limit_check(g, x)
        lim = gadget_limit(g)
        gap = max(abs(e.lo_fraction - lim), abs(e.hi_fraction - lim))
        ok = gap <= Fraction(1, 10**5)
        failures += not ok
        rows.append({"check": "limit", "gadget": g.label, "x": str(x), "ok": ok,
                     "detail": f"limit {lim}, distance <= {float(gap):.3e}"})
    return rows, failures, inconclusive


def cmd_verify(args) -> int:
    claim_name = args.claim
    cfg = OracleConfig(precision=_precision(args))
    default_s = [Fraction(1, 3)] if claim_name == "third" else [Fraction(1, 2)]
    s_values = args.s or default_s
    if claim_name == "exclusions":
        s_values = args.s or list(CRITICAL_S)
        records, failures = _verify_exclusions(args, s_values, cfg)
        _emit(records, args.format, args.out)
        _summary(args, f"{len(records)} checks, {failures} failed")
        return EXIT_OK if failures == 0 else EXIT_USAGE
    if claim_name == "gadgets":
        s_values = args.s or [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
        records, failures, inconclusive = _verify_gadgets(s_values)
        _emit(records, args.format, args.out)
        _summary(args, f"{len(records)} checks, {failures} failed, {inconclusive} inconclusive")
        return EXIT_OK if failures == 0 else EXIT_USAGE

    for s in s_values:
        if not 0 < s < 1:
            raise UsageError(f"--s must lie in (0, 1), got {s}")
    kind = ClaimKind(claim_name)
    if kind is ClaimKind.EPSILON_TIGHT:
        if args.eps is None:
            raise UsageError("verify epsilon needs --eps")
        try:
            claim = BoundClaim(kind, args.eps)
        except ZetaTailError as exc:
            raise UsageError(str(exc)) from exc
        n0 = max(aligned_even_bound(epsilon_threshold(s, args.eps)) for s in s_values)
        n_from = args.n_from if args.n_from is not None else n0
        n_to = args.n_to if args.n_to is not None else n_from + 98
    else:
        if args.eps is not None:
            raise UsageError("--eps applies to the epsilon claim only")
        if kind is ClaimKind.REFINED_THIRD and any(s != Fraction(1, 3) for s in s_values):
            raise UsageError("the third claim is stated for s = 1/3 only")
        claim = BoundClaim(kind)
        n_from = args.n_from if args.n_from is not None else 2
        n_to = args.n_to if args.n_to is not None else 100
    if n_from < 1 or n_to < n_from:
        raise UsageError("need 1 <= --n-from <= --n-to")
    reports = sweep_bounds(claim, range(n_from, n_to + 1), s_values, cfg)
    _emit(_bound_records(reports), args.format, args.out)
    counts = {st: sum(r.status is st for r in reports) for st in Status}
    _summary(args, ", ".join(f"{counts[st]} {st.value}" for st in Status))
    return EXIT_OK if counts[Status.FAILS] == 0 else EXIT_USAGE


def cmd_threshold(args) -> int:
    s = args.s
    if args.eps is None:
        raise UsageError("threshold needs --eps")
    try:
        x0 = epsilon_threshold(s, args.eps)
    except (ZetaTailError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    _emit([{"s": str(s), "eps": str(args.eps), "x0": f"{x0:.12e}", "n0": aligned_even_bound(x0)}],
          args.format, args.out)
    return EXIT_OK


def _summary(args, text: str) -> None:
    stream = sys.stdout if args.format == "human" and not args.out else sys.stderr
    print(f"summary: {text}", file=stream)


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=int, default=None,
                        help=f"working precision in bits (default 128, or ${PREC_ENV})")
    common.add_argument("--format", choices=["csv", "json", "human"], default="human")
    common.add_argument("--out", default=None, help="write output to this file instead of stdout")

    parser = _Parser(prog="zetatail", description="Certified inverse tails of the Riemann zeta function.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("tail", parents=[common], help="enclose a tail value",
                       description="Columns: n, s, quantity, method, prec, terms, lo, hi.")
    p.add_argument("n", type=int)
    p.add_argument("s", type=_rational, help='exponent, e.g. "1/2", "0.25" or "6"')
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.ACCEL.value)
    p.add_argument("--width", type=_rational, default=None,
                   help="target absolute width (default 2**-(prec-28) accel, 1e-3 naive)")
    p.add_argument("--kind", choices=["zeta", "eta", "ab"], default="zeta",
                   help="zeta_n(s), the alternating tail, or A/B by parity")
    p.set_defaults(func=cmd_tail)

    p = sub.add_parser("floor", parents=[common], help="certify an integer part",
                       description="Columns: n, s, mode, predicted, oracle_floor, status, prec, lo, hi.")
    p.add_argument("n", type=int)
    p.add_argument("s", type=_rational)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=None,
                   help="ab (A/B form), zeta (zeta form) or int (integer s); default by s")
    p.set_defaults(func=cmd_floor)

    p = sub.add_parser("verify", parents=[common], help="sweep a bound claim or run a check suite",
                       description="Bound claims emit: claim, n, s, status, lhs_lo, lhs_hi, mid_lo, "
                                   "mid_hi, rhs_lo, rhs_hi, prec, notes.  'exclusions' and "
                                   "'gadgets' emit: check, ..., ok, detail.  For 'epsilon' the "
                                   "default --n-from is the aligned threshold n0.")
    p.add_argument("claim", choices=[k.value for k in ClaimKind] + ["exclusions", "gadgets"])
    p.add_argument("--n-from", type=int, default=None)
    p.add_argument("--n-to", type=int, default=None)
    p.add_argument("--s", type=_rational, action="append", default=None, help="repeatable")
    p.add_argument("--eps", type=_rational, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("threshold", parents=[common], help="epsilon threshold x0 and even bound n0",
                       description="Columns: s, eps, x0, n0.")
    p.add_argument("s", type=_rational)
    p.add_argument("--eps", type=_rational, default=None, required=True)
    p.set_defaults(func=cmd_threshold)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"zetatail: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
