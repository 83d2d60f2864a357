"""Push an atypical weight to a typical one by a Frobenius twist."""
from superchar import GLContext, parse_weight
from superchar.borel_chain import is_typical
from superchar.jantzen import p_adic_digits, steinberg_reduce

ctx = GLContext(2, 1, 3)
for text in ["1,0|0", "4,0|0", "7,2|-2"]:
    mu = parse_weight(text)
    print(f"mu = {mu}, typical: {bool(is_typical(ctx, mu))}")
    print("  3-adic digits:", ", ".join(map(str, p_adic_digits(ctx, mu))))
    red = steinberg_reduce(ctx, mu)
    print(f"  lambda = mu + 3^{red.l} * ({red.varpi}) = {red.lam}, fallback used: {red.fallback}")
    print(f"  pairings of lambda: {list(is_typical(ctx, red.lam).pairings)}\n")
