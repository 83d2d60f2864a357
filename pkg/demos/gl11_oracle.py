"""GL(1|1) by hand: two-dimensional induced modules and the Smith-form oracle.

Everything about GL(1|1) is small enough to write down.  The induced module
of weight (i|j) has a basis of two weight vectors, and the integral map
between the two orientations is diag(1, i + j).  Its Smith form tells us
which layer of the Jantzen filtration each weight sits in.
"""
from superchar import GLContext, jantzen_sum, parse_weight
from superchar.gl11 import composition_analysis, jantzen_oracle, map_T, map_Tprime

p = 3
print(f"Working over GF({p}).\n")

for lam in [(2, 1), (2, 2), (5, 4)]:
    i, j = lam
    t, tp = map_T(i, j), map_Tprime(i, j)
    print(f"lambda = ({i}|{j}), pairing i + j = {i + j}")
    print(f"  T  : {t.source} -> {t.target}, matrix {t.matrix}")
    print(f"  T' T = {(tp @ t).matrix}")
    rep = composition_analysis(i, j, p)
    if rep["irreducible"]:
        print("  the module is irreducible mod p")
    else:
        print(f"  socle {rep['socle']['weight']} ({rep['socle']['basis']}), head {rep['head']['weight']}")
    oracle = jantzen_oracle(i, j, p)
    formula = jantzen_sum(GLContext(1, 1, p), parse_weight(f"{i}|{j}")).total
    print(f"  oracle  : {oracle.to_text()}")
    print(f"  formula : {formula.to_text()}\n")

# The full sweep is cheap
bad = 0
for q in (3, 5, 7):
    ctx = GLContext(1, 1, q)
    for i in range(-10, 11):
        for j in range(-10, 11):
            if i + j:
                bad += jantzen_sum(ctx, parse_weight(f"{i}|{j}")).total != jantzen_oracle(i, j, q)
print(f"sweep |i|,|j| <= 10, p in 3,5,7: {bad} disagreements")
