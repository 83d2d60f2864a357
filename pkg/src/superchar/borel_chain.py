"""Odd reflections, the canonical chain of Borel subalgebras, typicality.

The chain starts at the standard simple system and reflects successively
along beta_1, ..., beta_mn.  Each step flips exactly one odd positive root.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import InvalidReflectionError, NonDominantWarning, NotDominantError, RangeError
from .root_data import (
    GLContext,
    Root,
    Weight,
    as_half,
    int_pairing,
    is_dominant,
    odd_root,
    rho_vectors,
    two_rho1,
)
from .weyl import act, longest_element

__all__ = [
    "SimpleSystem",
    "OddPositiveSet",
    "TypicalityResult",
    "odd_reflect",
    "simple_system",
    "xi_support",
    "lambda_chain",
    "is_typical",
    "is_p_typical",
    "shifted_pairings",
    "track_highest",
    "highest_weight_path",
    "head_weight",
    "super_longest_check",
]


@dataclass(frozen=True)
class SimpleSystem:
    """An ordered list of simple roots; equality ignores order.

    ``chain_index`` is the position in the canonical chain, or ``None`` for
    a system reached some other way.
    """

    roots: tuple[Root, ...]
    chain_index: int | None = 0

    def __eq__(self, other):
        if not isinstance(other, SimpleSystem):
            return NotImplemented
        return frozenset(self.roots) == frozenset(other.roots)

    def __hash__(self):
        return hash(frozenset(self.roots))

    def __contains__(self, root):
        return root in self.roots

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def odd_roots(self) -> tuple[Root, ...]:
        return tuple(a for a in self.roots if a.is_odd)

    def __str__(self):
        return ", ".join(map(str, self.roots))


@dataclass(frozen=True)
class OddPositiveSet:
    """``signs[j-1] = +1`` when beta_j is positive, ``-1`` when -beta_j is."""

    signs: tuple[int, ...]

    def roots(self, ctx: GLContext) -> tuple[Root, ...]:
        return tuple(b if s > 0 else -b for s, b in zip(self.signs, ctx.odd_positive_roots))


def _standard(ctx: GLContext) -> SimpleSystem:
    return SimpleSystem(ctx.simple_roots, 0)


def odd_reflect(ctx: GLContext, system: SimpleSystem, beta: Root) -> SimpleSystem:
    """Reflect ``system`` along the odd simple root ``beta``."""
    if beta.is_even or beta not in system.roots:
        raise InvalidReflectionError(f"{beta} is not an odd root of {{{system}}}")
    out = []
    for alpha in system.roots:
        if alpha == beta:
            out.append(-beta)
        elif int_pairing(ctx, alpha, beta) != 0:
            out.append(alpha + beta)
        else:
            out.append(alpha)
    idx = system.chain_index
    new_idx = None
    if idx is not None:
        if idx < ctx.m * ctx.n and beta == odd_root(ctx, idx + 1):
            new_idx = idx + 1
        elif idx >= 1 and beta == -odd_root(ctx, idx):
            new_idx = idx - 1
    return SimpleSystem(tuple(out), new_idx)


@lru_cache(maxsize=None)
def _chain(ctx: GLContext) -> tuple[SimpleSystem, ...]:
    systems = [_standard(ctx)]
    for i in range(1, ctx.m * ctx.n + 1):
        systems.append(odd_reflect(ctx, systems[-1], odd_root(ctx, i)))
    return tuple(systems)


def simple_system(ctx: GLContext, i: int) -> SimpleSystem:
    """The simple system after reflecting along beta_1, ..., beta_i."""
    if not 0 <= i <= ctx.m * ctx.n:
        raise RangeError(f"chain index {i} outside 0..{ctx.m * ctx.n}")
    return _chain(ctx)[i]


def xi_support(ctx: GLContext, i: int) -> OddPositiveSet:
    mn = ctx.m * ctx.n
    if not 0 <= i <= mn:
        raise RangeError(f"chain index {i} outside 0..{mn}")
    return OddPositiveSet((-1,) * i + (1,) * (mn - i))


def lambda_chain(ctx: GLContext, lam: Weight) -> list[Weight]:
    """``[lam_0, ..., lam_mn]`` with ``lam_i = lam_{i-1} - beta_i``."""
    ctx.check_weight(lam)
    chain = [lam]
    for beta in ctx.odd_positive_roots:
        chain.append(chain[-1] - beta)
    return chain


def shifted_pairings(ctx: GLContext, lam: Weight) -> tuple[int, ...]:
    """``((lam + rho, beta_i))_i``, each an integer."""
    rho = rho_vectors(ctx)[2]
    shifted = as_half(lam) + rho
    return tuple(int_pairing(ctx, shifted, b) for b in ctx.odd_positive_roots)


@dataclass(frozen=True)
class TypicalityResult:
    """Truthy iff typical; ``first_failure`` is the first offending index (1-based)."""

    typical: bool
    first_failure: int | None
    pairings: tuple[int, ...] = field(default=())

    def __bool__(self):
        return self.typical


def _require_dominant(ctx, lam):
    if not is_dominant(ctx, lam):
        raise NotDominantError(f"{lam} is not dominant", weight=str(lam))


def is_typical(ctx: GLContext, lam: Weight) -> TypicalityResult:
    _require_dominant(ctx, lam)
    pairs = shifted_pairings(ctx, lam)
    chain = lambda_chain(ctx, lam)
    for i, beta in enumerate(ctx.odd_positive_roots, start=1):
        # (lam + rho, beta_i) = (lam_{i-1}, beta_i)
        if int_pairing(ctx, chain[i - 1], beta) != pairs[i - 1]:
            raise AssertionError(f"shifted pairing identity fails at i={i} for {lam}")
    bad = next((i for i, c in enumerate(pairs, start=1) if c == 0), None)
    return TypicalityResult(bad is None, bad, pairs)


def is_p_typical(ctx: GLContext, lam: Weight) -> TypicalityResult:
    p = ctx.require_p()
    _require_dominant(ctx, lam)
    pairs = shifted_pairings(ctx, lam)
    bad = next((i for i, c in enumerate(pairs, start=1) if c % p == 0), None)
    return TypicalityResult(bad is None, bad, pairs)


def highest_weight_path(ctx: GLContext, mu: Weight) -> tuple[list[Weight], list[bool]]:
    """The sequence ``mu^(0), ..., mu^(mn)`` and a per-step dominance flag.

    Step i subtracts beta_i unless ``(mu^(i-1), beta_i)`` is divisible by p.
    """
    p = ctx.require_p()
    _require_dominant(ctx, mu)
    path = [mu]
    for beta in ctx.odd_positive_roots:
        cur = path[-1]
        path.append(cur if int_pairing(ctx, cur, beta) % p == 0 else cur - beta)
    return path, [is_dominant(ctx, w) for w in path]


def track_highest(ctx: GLContext, mu: Weight) -> Weight:
    """The highest weight of L(mu) with respect to the last Borel of the chain."""
    path, dominant = highest_weight_path(ctx, mu)
    if not all(dominant):
        bad = [str(w) for w, ok in zip(path, dominant) if not ok]
        warnings.warn(f"non-dominant intermediate weights while tracking {mu}: {bad}", NonDominantWarning)
    return path[-1]


def head_weight(ctx: GLContext, lam: Weight) -> tuple[Weight, Weight]:
    """Return ``(gamma, label)`` where ``gamma = -w0 lam + 2 rho_1``.

    ``label`` is the highest weight of the head of the Weyl module V(lam),
    namely ``-w0`` applied to the tracked weight of ``gamma``.
    """
    _require_dominant(ctx, lam)
    w0 = longest_element(ctx)
    gamma = -act(w0, lam) + two_rho1(ctx)
    return gamma, -act(w0, track_highest(ctx, gamma))


def super_longest_check(ctx: GLContext) -> bool:
    """Does w0 applied after the full odd chain send the standard system to its negative?"""
    last = simple_system(ctx, ctx.m * ctx.n)
    w0 = longest_element(ctx)
    image = set()
    for alpha in last.roots:
        v = act(w0, alpha.as_weight()).coords
        i = v.index(1) + 1
        j = v.index(-1) + 1
        image.add(ctx.root(i, j))
    return image == {-a for a in ctx.simple_roots}
