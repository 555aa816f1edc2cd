"""Search obstructed Salem quartics for a few hyperbolic forms.

Run: python demos/obstruction_search.py
"""
from salemforge import BrauerClass, DiagForm, find_obstructed, form_with_witt, witt_class

cases = [(3, DiagForm((1, -1, -1, -1))), (3, DiagForm((1, -1, -2, -3)))]

target = BrauerClass.of_symbol(-2, -5)
q = form_with_witt(target, 30)
print(f"form with Witt class {target}: {q} (check: {witt_class(q)})")
cases.append((4, q))
cases.append((4, DiagForm((1, -1, -1, -1, -1))))
cases.append((5, DiagForm((1, -1, -1, -1, -1, -3))))

for dim, form in cases:
    res = find_obstructed(form, dim, 50)
    head = f"dim {dim} {form}: "
    if res.witness is None:
        print(head + f"nothing obstructed ({res.scanned} scanned, {res.indeterminate} indeterminate)")
        continue
    ev = res.report.evidence
    print(head + f"({res.witness.a},{res.witness.b}) obstructed after {res.scanned} candidates")
    print("    evidence: " + ", ".join(f"{k}={v}" for k, v in ev.items()))
