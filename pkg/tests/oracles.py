"""Slow, independent reference computations used only by the tests.

Nothing here imports the library's character code: weights are plain
``(delta, eps)`` tuples and characters are plain dicts.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from functools import lru_cache


# --- characters as dicts ----------------------------------------------------


def add(*chars):
    out = defaultdict(int)
    for ch in chars:
        for w, c in ch.items():
            out[w] += c
    return {w: c for w, c in out.items() if c}


def scale(k, ch):
    return {w: k * c for w, c in ch.items() if k * c}


def mul(a, b):
    out = defaultdict(int)
    for (d1, e1), c1 in a.items():
        for (d2, e2), c2 in b.items():
            w = (tuple(x + y for x, y in zip(d1, d2)), tuple(x + y for x, y in zip(e1, e2)))
            out[w] += c1 * c2
    return {w: c for w, c in out.items() if c}


# --- Schur polynomials from semistandard tableaux ---------------------------


def _ssyt(shape, k):
    """All semistandard fillings of ``shape`` with entries 0..k-1, as row lists."""
    rows = [r for r in shape if r > 0]

    def fill(idx, prev):
        if idx == len(rows):
            yield []
            return
        length = rows[idx]

        def row(pos, lo_left, acc):
            if pos == length:
                yield list(acc)
                return
            below = prev[pos] + 1 if prev is not None else 0
            for v in range(max(lo_left, below), k):
                acc.append(v)
                yield from row(pos + 1, v, acc)
                acc.pop()

        for r in row(0, 0, []):
            for rest in fill(idx + 1, r):
                yield [r] + rest

    yield from fill(0, None)


@lru_cache(maxsize=None)
def schur_tableaux(lam: tuple[int, ...]) -> dict:
    """``s_lam(x_1..x_k)`` for a weakly decreasing integer vector, via tableaux and a determinant twist."""
    k = len(lam)
    if k == 0:
        return {(): 1}
    low = min(lam)
    shape = tuple(x - low for x in lam)
    out = defaultdict(int)
    for tab in _ssyt(shape, k):
        expo = [low] * k
        for r in tab:
            for v in r:
                expo[v] += 1
        out[tuple(expo)] += 1
    return dict(out)


def weyl_even(delta, eps) -> dict:
    """Character of the even induced module, zero unless both blocks are weakly decreasing."""
    if list(delta) != sorted(delta, reverse=True) or list(eps) != sorted(eps, reverse=True):
        return {}
    left = schur_tableaux(tuple(delta))
    right = schur_tableaux(tuple(eps))
    return {(a, b): ca * cb for a, ca in left.items() for b, cb in right.items()}


def weyl_dimension(delta, eps) -> int:
    """Product formula prod (l_a - l_b + b - a) / (b - a) over both blocks."""
    num = den = 1
    for block in (delta, eps):
        for a, b in itertools.combinations(range(len(block)), 2):
            num *= block[a] - block[b] + b - a
            den *= b - a
    return num // den


# --- even Euler characteristics ---------------------------------------------


def _straighten(block):
    """Return ``(sign, dominant)`` with ``block + rho = sign * w(dominant + rho)``, or ``(0, None)``."""
    k = len(block)
    shifted = [block[a] + (k - 1 - a) for a in range(k)]
    if len(set(shifted)) < k:
        return 0, None
    order = sorted(range(k), key=lambda a: -shifted[a])
    inversions = sum(1 for a, b in itertools.combinations(order, 2) if a > b)
    srt = [shifted[a] for a in order]
    return (-1) ** inversions, tuple(srt[a] - (k - 1 - a) for a in range(k))


def chi_even(delta, eps) -> dict:
    s1, d = _straighten(delta)
    s2, e = _straighten(eps)
    if s1 == 0 or s2 == 0:
        return {}
    return scale(s1 * s2, weyl_even(d, e))


def odd_roots(m, n):
    """Positive odd roots in the order beta_1, ..., beta_mn as (delta index, eps index), 0-based."""
    return [(m - 1 - k, l) for k in range(m) for l in range(n)]


def xi_standard(m, n) -> dict:
    ch = {((0,) * m, (0,) * n): 1}
    for a, b in odd_roots(m, n):
        d = [0] * m
        e = [0] * n
        d[a], e[b] = -1, 1
        ch = mul(ch, {((0,) * m, (0,) * n): 1, (tuple(d), tuple(e)): 1})
    return ch


def p_val(p, x):
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def even_jantzen_classical(delta, eps, p) -> dict:
    """Jantzen sum of the reductive group GL(m) x GL(n), computed block by block."""
    out = {}
    blocks = (list(delta), list(eps))
    for which in (0, 1):
        blk = blocks[which]
        k = len(blk)
        for a, b in itertools.combinations(range(k), 2):
            c = blk[a] - blk[b] + (b - a)
            for mp in range(p, c, p):
                new = list(blk)
                new[a] -= c - mp
                new[b] += c - mp
                d, e = (new, blocks[1]) if which == 0 else (blocks[0], new)
                out = add(out, scale(p_val(p, mp), chi_even(d, e)))
    return out


# --- explicit simple systems along the chain --------------------------------


def chain_fixture(m, n, i):
    """Simple system after i odd reflections, written from the explicit lists.

    Roots are strings like ``d1-e2``; the list reads the root diagram left to right.
    """
    d = lambda a: f"d{a}"
    e = lambda a: f"e{a}"

    def run(labels):
        return [f"{x}-{y}" for x, y in zip(labels, labels[1:])]

    if i == 0:
        return run([d(a) for a in range(1, m + 1)] + [e(b) for b in range(1, n + 1)])
    if n == 1:
        # beta_i = d_{i'} - e1 with i' = m - i + 1; e1 sits just left of d_{i'}
        ip = m - i + 1
        return run([d(a) for a in range(1, ip)] + [e(1)] + [d(a) for a in range(ip, m + 1)])
    k, l = divmod(i, n)
    if l == 0:
        # i = kn: all of eps sits between d_{k'-1} and d_{k'}
        kp = m - k + 1
        return run([d(a) for a in range(1, kp)] + [e(b) for b in range(1, n + 1)] + [d(a) for a in range(kp, m + 1)])
    # i = kn + l: e_1..e_l left of d_{m-k}, e_{l+1}..e_n right of it
    pivot = m - k
    return run(
        [d(a) for a in range(1, pivot)]
        + [e(b) for b in range(1, l + 1)]
        + [d(pivot)]
        + [e(b) for b in range(l + 1, n + 1)]
        + [d(a) for a in range(pivot + 1, m + 1)]
    )


def chain_fixture_displayed(m, n, i):
    """The literally displayed lists for the first two steps (n >= 2) and the last step."""
    ds = [f"d{a}-d{a + 1}" for a in range(1, m)]
    es = [f"e{b}-e{b + 1}" for b in range(1, n)]
    head = ds[: m - 2] + ([f"d{m - 1}-e1"] if m >= 2 else [])
    if i == 1 and n >= 2:
        return head + [f"e1-d{m}", f"d{m}-e2"] + es[1:]
    if i == 2 and n >= 2:
        return head + ["e1-e2", f"e2-d{m}"] + ([f"d{m}-e3"] if n >= 3 else []) + es[2:]
    if i == m * n:
        return es + [f"e{n}-d1"] + ds
    raise ValueError("no displayed list for this index")
