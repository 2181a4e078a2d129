"""Build Γ(H lex G, (u, b)) from its ingredients and recover them again."""
from lexpmv import (HEIS, UnitalGroup, Z, build_decomposition, build_representation, direct,
                    functor_morphism, functor_object, lex)

for h in (UnitalGroup(Z, (2,)), UnitalGroup(lex(Z, Z), (1, 0))):
    for g, b in ((Z, (1,)), (direct(Z, Z), (1, 1)), (HEIS, (0, 0, 1))):
        fo = functor_object(h, g, b)
        d = build_decomposition(fo.algebra, fo.ideal, 2)
        r = build_representation(d, fo.section, 2)
        print(f"{fo.algebra}: recovered b = {r.b_tail}, checks {r.report.verdict}"
              f" ({len(r.report.checks)} records)")

f = functor_morphism(UnitalGroup(Z, (1,)), Z, Z, [[2]])
print("\nlift of n -> 2n:", f.report.verdict, "; (1,-3) ->", f((1, -3)))
