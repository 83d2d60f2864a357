"""The Jantzen sum formula for Weyl modules of typical weights.

The sum splits into an even part (affine reflections along even roots, as
for the reductive group G_ev) and an odd part, one telescoping term per odd
root whose shifted pairing is divisible by p.  Atypical weights are pushed
to typical ones by a Steinberg twist.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from .borel_chain import head_weight, is_typical, lambda_chain, shifted_pairings
from .charring import Character, euler_apply, euler_chi, xi_product
from .errors import (
    AlreadyTypicalError,
    AtypicalError,
    NotDominantError,
    RangeError,
    ReductionUnavailableError,
    SkippedTermError,
)
from .root_data import GLContext, Root, Weight, as_half, coroot_pairing, is_dominant, rho_vectors

__all__ = [
    "OddIndexMode",
    "EvenTerm",
    "OddTerm",
    "JantzenReport",
    "valuation",
    "affine_reflect",
    "even_sum",
    "odd_term",
    "jantzen_sum",
    "p_adic_digits",
    "in_restricted_region",
    "steinberg_reduce",
    "SteinbergReduction",
]


class OddIndexMode(str, Enum):
    COROLLARY = "corollary"
    STRICT = "strict-paper"


def valuation(p: int, x: int) -> int:
    """``nu_p(x)`` for a nonzero integer."""
    if x == 0:
        raise ValueError("valuation of zero")
    x, v = abs(x), 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _thread_cap(requested: int | None) -> int:
    cap = os.environ.get("SUPERCHAR_THREADS")
    n = requested if requested is not None else 1
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            pass
    return max(1, n)


def _map_ordered(fn, items, threads):
    # results come back in input order, so merging is deterministic
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# --- even part --------------------------------------------------------------


def _even_coroot(ctx: GLContext, lam: Weight, alpha: Root) -> int:
    c = coroot_pairing(ctx, as_half(lam) + rho_vectors(ctx)[0], alpha)
    assert c.denominator == 1
    return int(c)


def affine_reflect(ctx: GLContext, lam: Weight, alpha: Root, mp: int) -> Weight:
    """``r_{alpha,mp} . lam = lam - (<lam + rho, alpha^vee> - mp) alpha``."""
    if not (alpha.is_even and alpha.is_positive()):
        raise RangeError(f"{alpha} is not a positive even root")
    c = _even_coroot(ctx, lam, alpha)
    if not 0 < mp < c:
        raise RangeError(f"mp={mp} outside the open interval (0, {c})", mp=mp, bound=c)
    return lam - (c - mp) * alpha.as_weight()


@dataclass(frozen=True)
class EvenTerm:
    alpha: Root
    mp: int
    valuation: int
    reflected: Weight
    term: Character


def even_sum(ctx: GLContext, lam: Weight, threads: int | None = None) -> tuple[list[EvenTerm], Character]:
    p = ctx.require_p()
    if not is_dominant(ctx, lam):
        raise NotDominantError(f"{lam} is not dominant", weight=str(lam))
    jobs = []
    for alpha in ctx.even_positive_roots:
        c = _even_coroot(ctx, lam, alpha)
        for mp in range(p, c, p):
            jobs.append((alpha, mp))

    def run(job):
        alpha, mp = job
        mu = affine_reflect(ctx, lam, alpha, mp)
        v = valuation(p, mp)
        return EvenTerm(alpha, mp, v, mu, v * euler_chi(ctx, mu))

    terms = _map_ordered(run, jobs, _thread_cap(threads))
    total = Character.zero()
    for t in terms:
        total = total + t.term
    return terms, total


# --- odd part ---------------------------------------------------------------


@dataclass(frozen=True)
class OddTerm:
    index: int
    pairing: int
    valuation: int
    k_range: tuple[int, int]
    window: tuple[int, int]
    term: Character


def odd_term(
    ctx: GLContext,
    lam: Weight,
    i: int,
    mode: OddIndexMode | str = OddIndexMode.COROLLARY,
    multiplicity: bool = True,
) -> OddTerm:
    """The contribution of beta_i, evaluated exactly by truncating the alternating tail.

    Each delta-content level of the output receives contributions from at
    most mn + 1 values of k.  Summing k up to i + mn + 1 completes every level
    in the window, and the completed levels just above it must cancel.
    """
    mode = OddIndexMode(mode)
    p = ctx.require_p()
    mn = ctx.m * ctx.n
    if not 1 <= i <= mn:
        raise RangeError(f"odd index {i} outside 1..{mn}")
    typ = is_typical(ctx, lam)
    if not typ:
        raise AtypicalError(f"{lam} is atypical at beta_{typ.first_failure}", weight=str(lam))
    pairing = typ.pairings[i - 1]
    if pairing % p:
        raise SkippedTermError(f"(lam + rho, beta_{i}) = {pairing} is prime to {p}", index=i, pairing=pairing)

    chain = lambda_chain(ctx, lam)
    nu = chain[i] if mode is OddIndexMode.COROLLARY else chain[i - 1]
    beta = ctx.odd_positive_roots[i - 1].as_weight()
    k_max = i + mn + 1

    # cancel at the level of monomials first, then take Euler characteristics
    formal = xi_product(ctx, i).shift(nu)
    prev = xi_product(ctx, i - 1)
    for k in range(1, k_max + 1):
        formal = formal + (-1) ** k * prev.shift(nu + k * beta)
    raw = euler_apply(ctx, formal)

    base = nu.delta_sum()
    lo, hi = base + i - mn, base + i
    # levels up to this one received every k that can reach them
    complete = base + k_max - (mn - i + 1)
    leak = raw.restrict(lambda w: hi < w.delta_sum() <= complete or w.delta_sum() < lo)
    if leak:
        raise AssertionError(f"odd tail for beta_{i} does not telescope outside the window: {leak!r}")
    term = raw.restrict(lambda w: lo <= w.delta_sum() <= hi)
    v = valuation(p, pairing)
    if multiplicity:
        term = v * term
    return OddTerm(i, pairing, v, (1, k_max), (lo, hi), term)


# --- assembly ---------------------------------------------------------------


@dataclass
class JantzenReport:
    lam: Weight
    p: int
    typical: bool
    pairings: tuple[int, ...]
    even_terms: list[EvenTerm]
    odd_terms: list[OddTerm]
    total: Character
    mode: OddIndexMode
    multiplicity: bool
    head_gamma: Weight | None = None
    head_label: Weight | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self, ctx: GLContext) -> dict:
        m, n = ctx.m, ctx.n
        return {
            "lambda": str(self.lam),
            "p": self.p,
            "typical": self.typical,
            "pairings": list(self.pairings),
            "modes": {"oddIndexMode": self.mode.value, "multiplicityMode": "on" if self.multiplicity else "off"},
            "evenTerms": [
                {
                    "alpha": str(t.alpha),
                    "mp": t.mp,
                    "valuation": t.valuation,
                    "reflected": str(t.reflected),
                    "term": t.term.to_json(m, n),
                }
                for t in self.even_terms
            ],
            "oddTerms": [
                {
                    "index": t.index,
                    "pairing": t.pairing,
                    "valuation": t.valuation,
                    "kRange": list(t.k_range),
                    "deltaWindow": list(t.window),
                    "term": t.term.to_json(m, n),
                }
                for t in self.odd_terms
            ],
            "headGamma": None if self.head_gamma is None else str(self.head_gamma),
            "headLabel": None if self.head_label is None else str(self.head_label),
            "total": self.total.to_json(m, n),
        }


def _steinberg_hint(ctx, lam):
    try:
        red = steinberg_reduce(ctx, lam)
    except ReductionUnavailableError as exc:
        return {"available": False, "reason": str(exc)}
    return {"available": True, **red.to_json()}


def jantzen_sum(
    ctx: GLContext,
    lam: Weight,
    mode: OddIndexMode | str = OddIndexMode.COROLLARY,
    multiplicity: bool = True,
    threads: int | None = None,
) -> JantzenReport:
    """Sum of the characters of the positive Jantzen layers of V(lam)."""
    mode = OddIndexMode(mode)
    p = ctx.require_p()
    ctx.check_weight(lam)
    typ = is_typical(ctx, lam)
    if not typ:
        raise AtypicalError(
            f"{lam} is atypical: (lam + rho, beta_{typ.first_failure}) = 0",
            weight=str(lam),
            index=typ.first_failure,
            steinberg=_steinberg_hint(ctx, lam),
        )
    evens, total = even_sum(ctx, lam, threads)
    indices = [i for i, c in enumerate(typ.pairings, start=1) if c % p == 0]
    odds = _map_ordered(lambda i: odd_term(ctx, lam, i, mode, multiplicity), indices, _thread_cap(threads))
    for t in odds:
        total = total + t.term
    gamma, label = head_weight(ctx, lam)
    return JantzenReport(lam, p, True, typ.pairings, evens, odds, total, mode, multiplicity, gamma, label)


# --- Steinberg reduction ----------------------------------------------------


def _differences(lam: Weight) -> tuple[list[int], list[int]]:
    d = [lam.delta[k] - lam.delta[k + 1] for k in range(len(lam.delta) - 1)]
    e = [lam.eps[k] - lam.eps[k + 1] for k in range(len(lam.eps) - 1)]
    return d, e


def _from_differences(d, e, last_d, last_e) -> Weight:
    delta = [last_d]
    for x in reversed(d):
        delta.append(delta[-1] + x)
    eps = [last_e]
    for x in reversed(e):
        eps.append(eps[-1] + x)
    return Weight(tuple(reversed(delta)), tuple(reversed(eps)))


def in_restricted_region(ctx: GLContext, lam: Weight) -> bool:
    """Membership in X_p^+(T): consecutive differences in 0..p-1 in both blocks."""
    p = ctx.require_p()
    d, e = _differences(lam)
    return all(0 <= x < p for x in d + e)


def p_adic_digits(ctx: GLContext, mu: Weight) -> list[Weight]:
    """Digits ``mu_0, ..., mu_r`` with ``mu = sum p^t mu_t``; the last coordinates go to ``mu_0``."""
    p = ctx.require_p()
    if not is_dominant(ctx, mu):
        raise NotDominantError(f"{mu} is not dominant", weight=str(mu))
    d, e = _differences(mu)

    def expand(x):
        out = []
        while x:
            x, r = divmod(x, p)
            out.append(r)
        return out

    dd = [expand(x) for x in d]
    ee = [expand(x) for x in e]
    length = max([1] + [len(x) for x in dd + ee])
    digits = []
    for t in range(length):
        dt = [x[t] if t < len(x) else 0 for x in dd]
        et = [x[t] if t < len(x) else 0 for x in ee]
        last_d = mu.delta[-1] if t == 0 else 0
        last_e = mu.eps[-1] if t == 0 else 0
        digits.append(_from_differences(dt, et, last_d, last_e))
    return digits


@dataclass(frozen=True)
class SteinbergReduction:
    lam: Weight
    varpi: Weight
    l: int
    digits: tuple[Weight, ...]
    fallback: bool

    def to_json(self) -> dict:
        return {
            "lambda": str(self.lam),
            "varpi": str(self.varpi),
            "l": self.l,
            "digits": [str(d) for d in self.digits],
            "fallbackVarpi": self.fallback,
        }


def steinberg_reduce(ctx: GLContext, mu: Weight) -> SteinbergReduction:
    """Find ``lam = mu + p^l varpi`` typical with ``l`` beyond the digit length of ``mu``.

    ``varpi`` is the sum of the first m-1 fundamental weights.  That choice
    leaves every pairing with an odd root through delta_m unchanged, so when
    one of those vanishes the determinant is added to ``varpi`` as well.
    """
    p = ctx.require_p()
    if not is_dominant(ctx, mu):
        raise NotDominantError(f"{mu} is not dominant", weight=str(mu))
    typ = is_typical(ctx, mu)
    if typ:
        raise AlreadyTypicalError(f"{mu} is already typical", weight=str(mu))
    if ctx.m == 1:
        raise ReductionUnavailableError("no Steinberg padding weight exists for m = 1", weight=str(mu))
    m, n = ctx.m, ctx.n
    digits = p_adic_digits(ctx, mu)
    r = len(digits) - 1

    base = tuple(m - 1 - k for k in range(m))
    # pairings with delta_m - eps_t do not move under base
    stuck = any(typ.pairings[t] == 0 for t in range(n))
    varpi = Weight(tuple(x + 1 for x in base) if stuck else base, (0,) * n)

    # each pairing vanishes for at most one l, so mn + 1 tries suffice
    for l in range(r + 1, r + 2 + m * n):
        lam = mu + p**l * varpi
        if is_typical(ctx, lam):
            return SteinbergReduction(lam, varpi, l, tuple(digits), stuck)
    raise AssertionError(f"no typical twist found for {mu}")  # pragma: no cover
