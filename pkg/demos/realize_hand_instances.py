"""Walk through the two smallest hand-checkable realizations.

Run: python demos/realize_hand_instances.py
"""
import math

from salemforge import realize, salem_check_deg4, sqrt_witness

for a, b in [(-1, -3), (-3, 1), (-1, -1)]:
    s = salem_check_deg4(a, b)
    w = sqrt_witness(s)
    print(f"({a},{b})  F = {s.poly}")
    print(f"  lambda = {s.value:.10f}, square-rootable: {'k=%d' % w.k if w else 'no'}")
    cert = realize(s)
    if cert.exponent == 2:
        print("  not square-rootable, so lambda^2 is realized instead")
    print(f"  alpha           = {cert.alpha}")
    print(f"  lemma quartic   = {cert.quartic}")
    print(f"  charpoly        = ({cert.target.poly}) * ({cert.quotient})")
    print(f"  length estimate = {cert.ell_numeric:.10f}")
    print(f"  log of target   = {math.log(cert.target.value):.10f}")
    print(f"  checks          = {cert.checks}")
    print()
