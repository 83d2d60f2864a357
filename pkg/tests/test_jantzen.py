import random
import warnings

import pytest

from oracles import add, chi_even, even_jantzen_classical, mul, odd_roots, scale, xi_standard
from superchar.borel_chain import is_typical, lambda_chain
from superchar.charring import Character, ch_weyl, euler_chi, schur_even
from superchar.errors import (
    AlreadyTypicalError,
    AtypicalError,
    NotDominantError,
    RangeError,
    ReductionUnavailableError,
    SkippedTermError,
)
from superchar.jantzen import (
    OddIndexMode,
    affine_reflect,
    even_sum,
    in_restricted_region,
    jantzen_sum,
    odd_term,
    p_adic_digits,
    steinberg_reduce,
    valuation,
)
from superchar.root_data import GLContext, Weight, parse_weight


def as_dict(ch):
    return {(w.delta, w.eps): c for w, c in ch.items()}


def e(text, coeff=1):
    return Character.monomial(parse_weight(text), coeff)


def random_dominant(rng, m, n, lo=-6, hi=10):
    return Weight(
        tuple(sorted((rng.randint(lo, hi) for _ in range(m)), reverse=True)),
        tuple(sorted((rng.randint(lo, hi) for _ in range(n)), reverse=True)),
    )


def test_valuation():
    assert valuation(3, 9) == 2 and valuation(3, -18) == 2 and valuation(5, 7) == 0
    with pytest.raises(ValueError):
        valuation(3, 0)


def test_affine_reflect():
    ctx = GLContext(2, 1, 3)
    alpha = ctx.root(1, 2)
    assert affine_reflect(ctx, parse_weight("3,0|1"), alpha, 3) == parse_weight("2,1|1")
    with pytest.raises(RangeError):
        affine_reflect(ctx, parse_weight("3,0|1"), alpha, 4)
    with pytest.raises(RangeError):
        affine_reflect(ctx, parse_weight("3,0|1"), alpha, 0)


def test_even_sum_gl21_example():
    ctx = GLContext(2, 1, 3)
    terms, total = even_sum(ctx, parse_weight("3,0|1"))
    assert [(t.mp, t.valuation, str(t.reflected)) for t in terms] == [(3, 1, "2,1|1")]
    assert total == euler_chi(ctx, parse_weight("2,1|1"))
    assert total.dim() == 2 * 4


@pytest.mark.parametrize("m,n,p", [(2, 1, 3), (2, 2, 3), (3, 1, 5), (3, 2, 3)])
def test_even_sum_against_classical(m, n, p):
    ctx = GLContext(m, n, p)
    rng = random.Random(m * 100 + n * 10 + p)
    xi = xi_standard(m, n)
    for _ in range(15):
        lam = random_dominant(rng, m, n, -3, 12)
        _, total = even_sum(ctx, lam)
        assert as_dict(total) == mul(even_jantzen_classical(lam.delta, lam.eps, p), xi)


def test_even_sum_rejects_non_dominant():
    with pytest.raises(NotDominantError):
        even_sum(GLContext(2, 1, 3), parse_weight("0,4|0"))


def test_odd_term_gl11():
    ctx = GLContext(1, 1, 3)
    assert odd_term(ctx, parse_weight("2|1"), 1).term == e("2|1")
    assert odd_term(ctx, parse_weight("2|1"), 1, OddIndexMode.STRICT).term == e("3|0")
    t = odd_term(ctx, parse_weight("5|4"), 1)
    assert (t.pairing, t.valuation, t.term) == (9, 2, e("5|4", 2))
    assert odd_term(ctx, parse_weight("5|4"), 1, multiplicity=False).term == e("5|4")
    with pytest.raises(SkippedTermError):
        odd_term(ctx, parse_weight("2|0"), 1)
    with pytest.raises(AtypicalError):
        odd_term(ctx, parse_weight("2|-2"), 1)
    with pytest.raises(RangeError):
        odd_term(ctx, parse_weight("2|1"), 2)


def closed_form(m, n, i, start, v):
    """v * chi(R e^start) with R the product over all odd roots except beta_i."""
    roots = odd_roots(m, n)
    r = {((0,) * m, (0,) * n): 1}
    for j, (a, b) in enumerate(roots, start=1):
        if j == i:
            continue
        d, f = [0] * m, [0] * n
        sign = 1 if j < i else -1
        d[a], f[b] = sign, -sign
        r = mul(r, {((0,) * m, (0,) * n): 1, (tuple(d), tuple(f)): 1})
    out = {}
    for (d, f), c in mul(r, {(start.delta, start.eps): 1}).items():
        out = add(out, scale(c, chi_even(d, f)))
    return scale(v, out)


@pytest.mark.parametrize("m,n,p", [(2, 1, 3), (2, 1, 5), (2, 2, 3), (1, 2, 3), (3, 1, 3)])
def test_odd_term_closed_form(m, n, p):
    ctx = GLContext(m, n, p)
    rng = random.Random(17 * m + n + p)
    seen = 0
    while seen < 12:
        lam = random_dominant(rng, m, n)
        typ = is_typical(ctx, lam)
        if not typ:
            continue
        chain = lambda_chain(ctx, lam)
        for i, c in enumerate(typ.pairings, start=1):
            if c % p:
                continue
            seen += 1
            beta = ctx.odd_positive_roots[i - 1].as_weight()
            cor = odd_term(ctx, lam, i)
            assert as_dict(cor.term) == closed_form(m, n, i, chain[i - 1], cor.valuation)
            strict = odd_term(ctx, lam, i, OddIndexMode.STRICT)
            assert as_dict(strict.term) == closed_form(m, n, i, chain[i - 1] + beta, strict.valuation)


def test_jantzen_gl11_total():
    ctx = GLContext(1, 1, 3)
    rep = jantzen_sum(ctx, parse_weight("2|1"))
    assert rep.total == e("2|1") and rep.even_terms == []
    assert rep.head_label == parse_weight("1|2") and rep.head_gamma == parse_weight("-1|-2")
    assert jantzen_sum(ctx, parse_weight("2|0")).total == 0


def test_jantzen_gl21_example():
    ctx = GLContext(2, 1, 3)
    lam = parse_weight("3,0|1")
    rep = jantzen_sum(ctx, lam)
    assert rep.pairings == (1, 5) and rep.odd_terms == []
    assert rep.total == schur_even(ctx, parse_weight("2,1|1")) * (e("0,0|0") + e("0,-1|1")) * (e("0,0|0") + e("-1,0|1"))
    rep5 = jantzen_sum(GLContext(2, 1, 5), lam)
    assert [t.index for t in rep5.odd_terms] == [2]
    assert rep5.total.is_nonnegative()
    assert rep5.total.support() <= ch_weyl(ctx, lam).support()


def test_jantzen_atypical_carries_hint():
    ctx = GLContext(2, 1, 3)
    with pytest.raises(AtypicalError) as info:
        jantzen_sum(ctx, parse_weight("1,0|0"))
    hint = info.value.details["steinberg"]
    assert hint["available"] and hint["lambda"] == "7,3|0"


def test_jantzen_json_shape():
    ctx = GLContext(2, 1, 5)
    blob = jantzen_sum(ctx, parse_weight("3,0|1")).to_json(ctx)
    assert blob["modes"] == {"oddIndexMode": "corollary", "multiplicityMode": "on"}
    assert blob["oddTerms"][0]["kRange"][0] == 1
    assert Character.from_json(blob["total"]).is_nonnegative()


def test_per_term_negativity_counterexample():
    # a single odd term can be negative although the total is not
    ctx = GLContext(2, 2, 3)
    lam = parse_weight("-5,-5|2,2")
    rep = jantzen_sum(ctx, lam)
    assert rep.pairings == (-3, -4, -2, -3)
    first = rep.odd_terms[0]
    assert first.index == 1 and first.term.coefficient(parse_weight("-6,-6|3,3")) == -1
    assert rep.total.is_nonnegative()


def test_threads_do_not_change_result(monkeypatch):
    ctx = GLContext(2, 2, 3)
    lam = parse_weight("9,3|3,1")
    one = jantzen_sum(ctx, lam, threads=1)
    many = jantzen_sum(ctx, lam, threads=4)
    assert one.total == many.total and len(one.odd_terms) == 2
    monkeypatch.setenv("SUPERCHAR_THREADS", "2")
    assert jantzen_sum(ctx, lam).total == one.total


def test_p_adic_digits():
    ctx = GLContext(2, 1, 3)
    assert p_adic_digits(ctx, parse_weight("4,0|0")) == [parse_weight("1,0|0"), parse_weight("1,0|0")]
    mu = parse_weight("17,2|-3")
    digits = p_adic_digits(ctx, mu)
    acc = Weight((0, 0), (0,))
    for t, d in enumerate(digits):
        if t:
            assert in_restricted_region(ctx, d) and d.delta[-1] == 0 and d.eps[-1] == 0
        acc = acc + 3**t * d
    assert acc == mu and in_restricted_region(ctx, digits[0])


def test_steinberg_examples():
    ctx = GLContext(2, 1, 3)
    red = steinberg_reduce(ctx, parse_weight("1,0|0"))
    assert (red.lam, red.varpi, red.l, red.fallback) == (
        parse_weight("7,3|0"),
        parse_weight("2,1|0"),
        1,
        True,
    )
    with pytest.raises(AlreadyTypicalError):
        steinberg_reduce(ctx, parse_weight("3,0|1"))
    with pytest.raises(ReductionUnavailableError):
        steinberg_reduce(GLContext(1, 2, 3), parse_weight("0|0,0"))


@pytest.mark.parametrize("m,n,p", [(2, 1, 3), (2, 2, 5), (3, 1, 3), (3, 2, 3)])
def test_steinberg_always_lands_typical(m, n, p):
    ctx = GLContext(m, n, p)
    rng = random.Random(m + 7 * n + p)
    found = 0
    while found < 20:
        mu = random_dominant(rng, m, n, -4, 6)
        if is_typical(ctx, mu):
            continue
        found += 1
        red = steinberg_reduce(ctx, mu)
        assert is_typical(ctx, red.lam)
        assert red.lam == mu + p**red.l * red.varpi
        assert red.l > len(red.digits) - 1


@pytest.mark.parametrize("m,n,p", [(2, 1, 3), (2, 2, 5), (1, 2, 3)])
def test_layer_sum_bound(m, n, p):
    # a weight space sits in at most (sum of all term valuations) layers
    ctx = GLContext(m, n, p)
    rng = random.Random(31 * m + n + p)
    seen = 0
    while seen < 20:
        lam = random_dominant(rng, m, n)
        if not is_typical(ctx, lam):
            continue
        seen += 1
        rep = jantzen_sum(ctx, lam)
        v = ch_weyl(ctx, lam)
        bound = sum(t.valuation for t in rep.even_terms + rep.odd_terms)
        assert all(0 <= c <= bound * v.coefficient(w) for w, c in rep.total.items())


def test_largest_valuation_alone_does_not_bound_the_sum():
    # an even and an odd layer stack on the same weights
    ctx = GLContext(2, 1, 3)
    lam = parse_weight("4,1|-2")
    rep = jantzen_sum(ctx, lam)
    assert [t.valuation for t in rep.even_terms + rep.odd_terms] == [1, 1]
    assert rep.total.dim() == 17 > ch_weyl(ctx, lam).dim() == 16
