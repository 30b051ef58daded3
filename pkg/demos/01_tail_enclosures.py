"""
Certified tails of the zeta function
====================================

The alternating tail ``sum_{k>=n} (-1)**(k+1) k**-s`` converges painfully
slowly for small ``s``.  Two independent routes enclose it: a partial-sum
bracket and an accelerated sum with a rigorous error term.  Both must agree.
"""

from fractions import Fraction

import numpy as np

from zetatail import Method, OracleConfig, TailQuery, decimal_bounds, zeta_tail
from zetatail.tails import eta_tail_evaluation

###############################################################################
# A single tail, two ways
# -----------------------
# The bracket gets three digits from a few dozen terms; the accelerated
# route reaches thirty digits with about forty.

naive = OracleConfig(method=Method.NAIVE, target_width=Fraction(1, 1000))
for cfg in (naive, OracleConfig()):
    ev = eta_tail_evaluation(2, Fraction(1, 2), cfg)
    lo, hi = decimal_bounds(ev.enclosure, 32)
    print(f"{ev.method.value:5s} terms={ev.terms:4d}  [{lo}, {hi}]")

###############################################################################
# Term counts as s shrinks
# ------------------------
# At five digits the bracket's cost, which grows like ``(s/target)**(1/(s+1))``,
# runs to hundreds or thousands of terms, while the accelerated count stays put.

five_digits = OracleConfig(method=Method.NAIVE, target_width=Fraction(1, 10**5))
s_values = np.array([0.9, 0.75, 0.5, 0.25, 0.1])
for s in s_values:
    s = Fraction(str(s))
    slow = eta_tail_evaluation(5, s, five_digits).terms
    fast = eta_tail_evaluation(5, s).terms
    print(f"s={str(s):5s} naive {slow:6d} terms, accelerated {fast:3d} terms")

###############################################################################
# The tail of zeta itself
# -----------------------
# In the critical strip the tail takes the sign of ``(-1)**n``.  Above one it
# is an ordinary positive sum.

for n, s in ((2, "1/2"), (3, "1/2"), (2, "2"), (829, "6")):
    e = zeta_tail(TailQuery(n, s))
    print(f"zeta_{n}({s}) in [{', '.join(decimal_bounds(e, 20))}]")
