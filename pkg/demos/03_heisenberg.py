"""Γ(Heis, (1,0,0)): a non-commutative interval and its tail ideals.

Left and right negation differ because the unit is not central.  The tail
ideal of depth 1 is normal, strict and prime, yet no section meets the
commutation condition x - c_t = -c_t + x, so it is not lexicographic.
"""
from lexpmv import (check_axioms, check_identity, classify_ideal, mv_lneg, mv_rneg,
                    parse_spec, symmetry_witness, tail_ideal)

m = parse_spec("Gamma(Heis, (1,0,0))").algebra
print(check_axioms(m, 2).verdict, "on the axioms at bound 2")

s = symmetry_witness(m)
x = m(s.witness)
print(f"x = {x}: x^- = {mv_lneg(x)}, x^~ = {mv_rneg(x)}, unit central: {s.unit_central}")

rep = check_identity(m, "x (+) y = y (+) x", bound=2)
print("commutativity:", rep.verdict, rep["identity"].witness)

for j in (1, 2):
    c = classify_ideal(tail_ideal(m, j), bound=2)
    f = c.report.first_failure()
    print(f"tail:{j}: {c.label}" + (f"  ({f.name} fails at {f.witness})" if f else ""))
