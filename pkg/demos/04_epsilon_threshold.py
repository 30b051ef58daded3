"""
Where the tightened bound starts to hold
========================================

Shrinking the upper offset to ``1/2 - eps`` still gives a valid bound, but
only for large ``n``.  The crossing point comes from a ratio ``h`` that
decreases towards ``(1/2 - eps)/(1/2 + eps)``.
"""

from fractions import Fraction

import numpy as np

from zetatail import (
    BoundClaim,
    ClaimKind,
    Gadget,
    GadgetKind,
    aligned_even_bound,
    check_bound,
    epsilon_threshold,
    eval_gadget,
    h_tight,
)

###############################################################################
# Thresholds across eps
# ---------------------

for eps in (0.1, 0.05, 0.01, 0.001):
    x0 = epsilon_threshold(0.5, eps)
    print(f"eps={eps:<6} x0={x0:10.3f}  n0={aligned_even_bound(x0)}")

###############################################################################
# The ratio near the crossing
# ---------------------------

eps, s = Fraction(1, 10), Fraction(1, 2)
x0 = epsilon_threshold(s, eps)
xs = x0 * np.array([0.9, 0.99, 1.0, 1.01, 1.1])
print(np.round([h_tight(x, 0.5, 0.1) for x in xs], 6))
g = Gadget(GadgetKind.H_TIGHT, s=s, eps=eps)
print("certified below one just past x0:", eval_gadget(g, Fraction(x0) * Fraction(101, 100)).strictly_below(1))

###############################################################################
# Small n can fail, large n holds
# -------------------------------

claim = BoundClaim(ClaimKind.EPSILON_TIGHT, eps)
for n in (2, 4, 6, aligned_even_bound(x0), 200):
    print(f"n={n:4d}  {check_bound(claim, n, s).status.value}")
