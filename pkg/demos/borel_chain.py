"""Walk the chain of Borel subalgebras of gl(3|2) by odd reflections.

Each step flips one odd simple root.  After all six steps every odd root
has been reflected, and the longest Weyl element sends the final system to
minus the distinguished one.
"""
from superchar import GLContext, parse_weight
from superchar.borel_chain import is_typical, lambda_chain, simple_system, super_longest_check

ctx = GLContext(3, 2)
betas = ctx.odd_positive_roots
print("odd roots in chain order:", ", ".join(map(str, betas)))
print()
for i in range(ctx.m * ctx.n + 1):
    tag = "start" if i == 0 else f"after {betas[i - 1]}"
    print(f"B({i}) {tag:>14}:  {simple_system(ctx, i)}")
print("\nsuper longest element check:", super_longest_check(ctx))

lam = parse_weight("5,2,0|1,-1")
res = is_typical(ctx, lam)
print(f"\nlambda = {lam}: typical = {bool(res)}, pairings = {list(res.pairings)}")
for i, w in enumerate(lambda_chain(ctx, lam)):
    print(f"  lambda_{i} = {w}")
