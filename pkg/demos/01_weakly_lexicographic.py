"""Γ(Z lex Z, (2,1)): a tail ideal with an additive section but no homomorphic one.

The middle slice would need an element c with c + c = (2,1), i.e. a half of
the unit, and Z has none.  The best available family is c_t = (t, 0), which
leaves an offset b = (2,1) - (2,0) = 1.
"""
from lexpmv import build_decomposition, check_theorem_3_2, classify_ideal, parse_spec, represent, tail_ideal

m = parse_spec("Gamma(Z lex Z, (2,1))").algebra
ideal = tail_ideal(m, 1)

c = classify_ideal(ideal, search=10)
print(f"{m}  {ideal}: {c.label}")
print("  homomorphic section:", c.section)
print("  additive section:   ", c.weak_section.describe(), " b =", c.offset[1:])

d = build_decomposition(m, ideal)
for t in range(3):
    members = [tuple(int(v) for v in x) for x in m.window(3) if d.slice_of(x)[0] == t]
    print(f"  slice M_{t}: {members}")

print(check_theorem_3_2(d).to_text())

r = represent(m, 1)
print(f"\nrepresentation onto {r.target} (family {'strong' if r.strong else 'weak'})")
