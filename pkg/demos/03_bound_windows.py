"""
How tight are the inverse-tail windows?
=======================================

Every even ``n`` puts ``A**-1`` strictly between ``2(n - 1/2)**s`` and
``2(n - 1/4)**s``.  Here we look at where inside that window the value sits.
"""

from fractions import Fraction

import numpy as np

from zetatail import BoundClaim, ClaimKind, Status, sweep_bounds

###############################################################################
# Relative position in the window
# -------------------------------
# 0 means the lower edge, 1 the upper edge.

claim = BoundClaim(ClaimKind.COMBINED)
for s in (Fraction(1, 10), Fraction(1, 2), Fraction(9, 10)):
    reports = sweep_bounds(claim, range(2, 401, 2), [s])
    assert all(r.status is Status.HOLDS for r in reports)
    pos = np.array([(float(r.middle) - float(r.lhs)) / (float(r.rhs) - float(r.lhs)) for r in reports])
    print(f"s={str(s):5s} position min {pos.min():.4f} max {pos.max():.4f} last {pos[-1]:.4f}")

###############################################################################
# The odd side mirrors the even side
# ----------------------------------

for r in sweep_bounds(claim, range(1, 8), [Fraction(1, 2)]):
    print(f"n={r.n}  {float(r.lhs):+.5f} < {float(r.middle):+.5f} < {float(r.rhs):+.5f}  {r.status.value}")
