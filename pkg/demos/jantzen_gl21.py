"""Jantzen sums for GL(2|1): even part, odd part and how they add up."""
import warnings

from superchar import GLContext, ch_weyl, jantzen_sum, parse_weight

warnings.simplefilter("ignore")

for p, text in [(3, "3,0|1"), (5, "3,0|1"), (3, "4,1|-2")]:
    ctx = GLContext(2, 1, p)
    lam = parse_weight(text)
    rep = jantzen_sum(ctx, lam)
    dim = ch_weyl(ctx, lam).dim()
    print(f"p = {p}, lambda = {lam}, dim V = {dim}, pairings {list(rep.pairings)}")
    for t in rep.even_terms:
        print(f"  even: alpha {t.alpha}, mp = {t.mp}, reflected {t.reflected}, dim {t.term.dim()}")
    for t in rep.odd_terms:
        print(f"  odd : beta_{t.index}, pairing {t.pairing}, valuation {t.valuation}, dim {t.term.dim()}")
    print(f"  total dimension {rep.total.dim()}, nonnegative: {rep.total.is_nonnegative()}")
    print(f"  head of V: {rep.head_label}\n")
