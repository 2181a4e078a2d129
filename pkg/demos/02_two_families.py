"""Γ(Z lex Z, (2,2)) carries two families of slice representatives.

c_t = (t, 0) is additive but misses the unit, so it represents the algebra
with offset b = 2; c_t = (t, t) hits the unit and gives b = 0.  The map
(t, n) -> (t, n + t) then identifies Γ(Z lex Z, (2,0)) with Γ(Z lex Z, (2,2)),
so the offset alone is not an isomorphism invariant.
"""
from lexpmv import (Section, build_decomposition, build_representation, check_isomorphism,
                    linear_map, parse_spec)

m = parse_spec("Gamma(Z lex Z, (2,2))").algebra
d = build_decomposition(m, 1)

for name, c in [("c_t = (t, 0)", Section.canonical(1, 1)), ("c_t = (t, t)", Section.linear([[1]]))]:
    r = build_representation(d, c)
    kind = "strong" if r.strong else "weak"
    print(f"{name}: {kind} family, target {r.target}, b = {r.b_tail}")
    print("   phi(1,3) =", r.phi((1, 3)))

base = parse_spec("Gamma(Z lex Z, (2,0))").algebra
rep = check_isomorphism(base, m, linear_map([[1, 0], [1, 1]]))
print(f"\n(t,n) -> (t,n+t): {rep.verdict}")
bad = check_isomorphism(base, m, lambda x: (x[0], x[1] + (0 if x[0] == 1 else x[0])))
print(f"shift only the top slice: {bad.verdict}, first failure {bad.first_failure().name}"
      f" at {bad.first_failure().witness}")
