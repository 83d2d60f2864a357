"""The even Weyl group W = S_m x S_n acting by block permutations."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .root_data import GLContext, HalfWeight, Root, Weight, as_half, rho_vectors

__all__ = [
    "WeylElement",
    "weyl_group",
    "identity",
    "longest_element",
    "reflection",
    "act",
    "dot_act",
    "make_dominant_regular",
]


def _inversions(perm) -> int:
    return sum(1 for a, b in itertools.combinations(perm, 2) if a > b)


@dataclass(frozen=True, slots=True)
class WeylElement:
    """A pair of permutations (0-based images).

    ``w`` sends ``delta_k`` to ``delta_{perm_delta[k]}`` and likewise on the
    eps block.
    """

    perm_delta: tuple[int, ...]
    perm_eps: tuple[int, ...]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (w w')(x) = w(w'(x))
        return WeylElement(
            tuple(self.perm_delta[k] for k in other.perm_delta),
            tuple(self.perm_eps[k] for k in other.perm_eps),
        )

    def inverse(self) -> "WeylElement":
        inv_d = [0] * len(self.perm_delta)
        for k, v in enumerate(self.perm_delta):
            inv_d[v] = k
        inv_e = [0] * len(self.perm_eps)
        for k, v in enumerate(self.perm_eps):
            inv_e[v] = k
        return WeylElement(tuple(inv_d), tuple(inv_e))

    def length(self) -> int:
        return _inversions(self.perm_delta) + _inversions(self.perm_eps)

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    det = sign

    def is_identity(self) -> bool:
        return self.perm_delta == tuple(range(len(self.perm_delta))) and self.perm_eps == tuple(
            range(len(self.perm_eps))
        )


def identity(ctx: GLContext) -> WeylElement:
    return WeylElement(tuple(range(ctx.m)), tuple(range(ctx.n)))


def longest_element(ctx: GLContext) -> WeylElement:
    return WeylElement(tuple(reversed(range(ctx.m))), tuple(reversed(range(ctx.n))))


def weyl_group(ctx: GLContext):
    """Iterate over all ``m! n!`` elements."""
    for pd in itertools.permutations(range(ctx.m)):
        for pe in itertools.permutations(range(ctx.n)):
            yield WeylElement(pd, pe)


def reflection(ctx: GLContext, alpha: Root) -> WeylElement:
    """The transposition ``r_alpha`` for an even root."""
    if alpha.is_odd:
        from .errors import InvalidRootError

        raise InvalidRootError(f"{alpha} is odd")
    pd, pe = list(range(ctx.m)), list(range(ctx.n))
    a, b = alpha.i - 1, alpha.j - 1
    if a < ctx.m:
        pd[a], pd[b] = b, a
    else:
        a, b = a - ctx.m, b - ctx.m
        pe[a], pe[b] = b, a
    return WeylElement(tuple(pd), tuple(pe))


def _permute(values, perm):
    out = [None] * len(values)
    for k, v in enumerate(values):
        out[perm[k]] = v
    return out


def act(w: WeylElement, mu):
    """Natural action on Weight or HalfWeight, permuting within each block."""
    if isinstance(mu, Weight):
        return Weight(tuple(_permute(mu.delta, w.perm_delta)), tuple(_permute(mu.eps, w.perm_eps)))
    mu = as_half(mu)
    d = mu.doubled
    return HalfWeight(
        tuple(_permute(d[: mu.m], w.perm_delta)) + tuple(_permute(d[mu.m :], w.perm_eps)), mu.m
    )


def dot_act(ctx: GLContext, w: WeylElement, lam: Weight) -> Weight:
    """``w.lam = w(lam + rho) - rho`` with ``rho = rho_0 - rho_1``."""
    rho = rho_vectors(ctx)[2]
    shifted = act(w, as_half(lam) + rho) - rho
    # 2*rho is integral and w only permutes blocks, so this is exact
    return shifted.to_weight()


def make_dominant_regular(ctx: GLContext, nu) -> tuple[WeylElement, HalfWeight] | None:
    """Find ``w`` with ``w(nu)`` strictly decreasing in both blocks.

    Returns ``None`` when ``nu`` has a repeated entry inside a block.
    """
    nu = as_half(nu)
    d = nu.doubled
    blocks = (d[: nu.m], d[nu.m :])
    perms = []
    for block in blocks:
        if len(set(block)) != len(block):
            return None
        order = sorted(range(len(block)), key=lambda k: -block[k])
        perm = [0] * len(block)
        for rank, k in enumerate(order):
            perm[k] = rank
        perms.append(tuple(perm))
    w = WeylElement(perms[0], perms[1])
    return w, act(w, nu)
