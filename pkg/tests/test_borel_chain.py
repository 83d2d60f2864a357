import random
import warnings

import pytest

from oracles import chain_fixture, chain_fixture_displayed
from superchar.borel_chain import (
    head_weight,
    highest_weight_path,
    is_p_typical,
    is_typical,
    lambda_chain,
    odd_reflect,
    simple_system,
    super_longest_check,
    track_highest,
    xi_support,
)
from superchar.errors import InvalidReflectionError, NonDominantWarning, NotDominantError, RangeError
from superchar.root_data import GLContext, Weight, int_pairing, is_dominant, parse_weight


def names(system):
    return [str(a) for a in system]


def test_first_reflection_gl21():
    ctx = GLContext(2, 1)
    first = odd_reflect(ctx, simple_system(ctx, 0), ctx.root(2, 3))
    assert names(first) == ["d1-e1", "e1-d2"]
    assert first.chain_index == 1


def test_reflection_is_an_involution():
    ctx = GLContext(3, 2)
    for i in range(1, 7):
        beta = ctx.odd_positive_roots[i - 1]
        back = odd_reflect(ctx, simple_system(ctx, i), -beta)
        assert back == simple_system(ctx, i - 1)
        assert back.chain_index == i - 1


def test_reflection_requires_simple_odd_root():
    ctx = GLContext(2, 2)
    with pytest.raises(InvalidReflectionError):
        odd_reflect(ctx, simple_system(ctx, 0), ctx.root(1, 2))
    with pytest.raises(InvalidReflectionError):
        odd_reflect(ctx, simple_system(ctx, 0), ctx.root(1, 3))


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(1, 5)])
def test_chain_matches_explicit_lists(m, n):
    ctx = GLContext(m, n)
    for i in range(m * n + 1):
        assert names(simple_system(ctx, i)) == chain_fixture(m, n, i)
        beta_i = ctx.odd_positive_roots[i - 1] if i else None
        if beta_i is not None:
            assert -beta_i in simple_system(ctx, i)
        if i < m * n:
            assert ctx.odd_positive_roots[i] in simple_system(ctx, i)


def test_displayed_lists():
    for m in range(1, 5):
        for n in range(2, 5):
            ctx = GLContext(m, n)
            for i in (1, 2, m * n):
                assert names(simple_system(ctx, i)) == chain_fixture_displayed(m, n, i)


def test_chain_range():
    with pytest.raises(RangeError):
        simple_system(GLContext(2, 1), 3)
    assert xi_support(GLContext(2, 1), 1).signs == (-1, 1)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(1, 5)])
def test_super_longest(m, n):
    assert super_longest_check(GLContext(m, n))


def test_typicality_examples():
    ctx = GLContext(2, 1, 3)
    res = is_typical(ctx, parse_weight("1,1|0"))
    assert res and res.pairings == (1, 2)
    assert is_p_typical(ctx, parse_weight("1,1|0"))
    bad = is_typical(ctx, parse_weight("1,0|0"))
    assert not bad and bad.first_failure == 1
    r = is_p_typical(ctx, parse_weight("3,0|1"))
    assert r and r.pairings == (1, 5)
    with pytest.raises(NotDominantError):
        is_typical(ctx, parse_weight("0,1|0"))


def test_pairing_identity_random():
    rng = random.Random(11)
    for _ in range(200):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        ctx = GLContext(m, n)
        lam = Weight(
            tuple(sorted((rng.randint(-5, 5) for _ in range(m)), reverse=True)),
            tuple(sorted((rng.randint(-5, 5) for _ in range(n)), reverse=True)),
        )
        chain = lambda_chain(ctx, lam)
        res = is_typical(ctx, lam)
        for i, beta in enumerate(ctx.odd_positive_roots, start=1):
            assert int_pairing(ctx, chain[i - 1], beta) == res.pairings[i - 1]
        assert all(is_dominant(ctx, w) for w in chain)


def test_track_highest_gl11():
    ctx = GLContext(1, 1, 3)
    # pairing 0 mod 3: the weight stays
    assert track_highest(ctx, Weight((2,), (1,))) == Weight((2,), (1,))
    assert track_highest(ctx, Weight((1,), (0,))) == Weight((0,), (1,))


def test_highest_weight_path_stays_dominant():
    # observed on all small boxes; track_highest would warn otherwise
    rng = random.Random(19)
    for _ in range(300):
        m, n, p = rng.randint(1, 3), rng.randint(1, 3), rng.choice((3, 5))
        ctx = GLContext(m, n, p)
        lam = Weight(
            tuple(sorted((rng.randint(-4, 4) for _ in range(m)), reverse=True)),
            tuple(sorted((rng.randint(-4, 4) for _ in range(n)), reverse=True)),
        )
        with warnings.catch_warnings():
            warnings.simplefilter("error", NonDominantWarning)
            track_highest(ctx, lam)
        path, flags = highest_weight_path(ctx, lam)
        assert all(flags) and len(path) == m * n + 1


def test_head_weight_examples():
    gamma, label = head_weight(GLContext(1, 1, 3), Weight((2,), (1,)))
    assert gamma == Weight((-1,), (-2,))
    assert label == Weight((1,), (2,))
    gamma, _ = head_weight(GLContext(2, 1, 3), Weight((1, 1), (0,)))
    assert gamma == Weight((0, 0), (-2,))


def test_head_weight_p_typical_is_lambda():
    # for p-typical weights the head is L(lambda) itself
    rng = random.Random(3)
    hits = 0
    while hits < 30:
        ctx = GLContext(2, 2, 5)
        lam = Weight(
            tuple(sorted((rng.randint(-4, 6) for _ in range(2)), reverse=True)),
            tuple(sorted((rng.randint(-4, 6) for _ in range(2)), reverse=True)),
        )
        if not is_p_typical(ctx, lam):
            continue
        hits += 1
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            assert head_weight(ctx, lam)[1] == lam
