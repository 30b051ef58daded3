"""
Certifying integer parts
========================

For ``s`` in {1/2, 1/3, 1/4} the integer part of the inverse paired tail is
``floor(+-2(n - 1/2)**s)``.  We certify it against the oracle and then check
the closed forms known for integer ``s``.
"""

from fractions import Fraction

import numpy as np

from zetatail import FloorStatus, Mode, certify_floor, known_integer_floor

###############################################################################
# Critical values of s
# --------------------

for s in (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)):
    certs = [certify_floor(n, s, Mode.AB) for n in range(1, 301)]
    statuses = {c.status for c in certs}
    print(f"s={s}: {len(certs)} certificates, statuses {sorted(st.value for st in statuses)}")

cert = certify_floor(7, Fraction(1, 3))
print(f"n=7, s=1/3: predicted {cert.predicted}, oracle {float(cert.oracle):.6f}")

###############################################################################
# Distance to the nearest integer
# -------------------------------
# Certification needs the enclosure to avoid integers.  The margin shrinks
# slowly, so modest precision suffices.

margins = np.array([
    min(abs(float(c.oracle) - np.floor(float(c.oracle))), abs(np.ceil(float(c.oracle)) - float(c.oracle)))
    for c in (certify_floor(n, Fraction(1, 4)) for n in range(1, 501))
])
print(f"s=1/4: smallest margin {margins.min():.3e} at n={margins.argmin() + 1}")

###############################################################################
# Integer s
# ---------

for s, n in ((2, 10), (3, 10), (4, 10), (5, 10), (6, 829)):
    c = certify_floor(n, s, Mode.INT)
    assert c.status is FloorStatus.CERTIFIED
    print(f"s={s} n={n}: closed form {known_integer_floor(n, s)} certified")
