"""Square-rootable Salem quartics for each small discriminant class.

Run: python demos/disc_classes.py
"""
from salemforge import disc_class, salem_with_disc, sqrt_witness, squarefree_part

for d in range(1, 31):
    if squarefree_part(d) != d:
        continue
    s = salem_with_disc(d, 200)
    if s is None:
        print(f"-{d:<3} none within bound 200")
        continue
    w = sqrt_witness(s)
    print(f"-{d:<3} (a,b) = ({s.a},{s.b})  k = {w.k}  F(1) = {s.F1}  F(-1) = {s.Fm1}"
          f"  class {disc_class(s)}")
