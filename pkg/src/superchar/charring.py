"""Formal characters: the group ring Z[X(T)] and the standard character formulas.

A :class:`Character` is a finitely supported map from weights to nonzero
integers.  Even Weyl characters are computed blockwise from Gelfand-Tsetlin
branching; the alternant quotient A(lam + rho_0) / A(rho_0) is kept as a
second, slower route for cross-checking.
"""
from __future__ import annotations

import itertools
import warnings
from collections import defaultdict
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .borel_chain import OddPositiveSet, xi_support
from .errors import NonDominantWarning, NotDominantError
from .root_data import GLContext, Weight, as_half, is_dominant, rho_vectors, two_rho1
from .weyl import act, longest_element, make_dominant_regular

__all__ = [
    "Character",
    "schur_even",
    "weyl_character_alternant",
    "xi_product",
    "euler_chi0",
    "euler_chi",
    "euler_chi_chain",
    "euler_apply",
    "ch_h0",
    "ch_weyl",
    "ch_h0_chain",
    "ch_total",
    "ch_kac",
    "weyl_dimension",
]


# Weights are packed into one integer with signed base-2^32 digits, so that
# adding packed integers adds weights as long as coordinates stay small.
_RADIX_BITS = 32
_RADIX = 1 << _RADIX_BITS
_HALF = _RADIX >> 1


def _pack(coords) -> int:
    key = 0
    for x in reversed(coords):
        if not -_HALF // 2 < x < _HALF // 2:
            raise OverflowError(f"weight coordinate {x} too large to multiply")
        key = key * _RADIX + x
    return key


def _unpack(key: int, size: int) -> tuple[int, ...]:
    out = []
    for _ in range(size):
        digit = key & (_RADIX - 1)
        if digit >= _HALF:
            digit -= _RADIX
        out.append(digit)
        key = (key - digit) >> _RADIX_BITS
    return tuple(out)


class Character:
    """An element of Z[X(T)], immutable once built."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        acc: dict[Weight, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            acc[w] += c
        self._terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def _raw(cls, terms: dict) -> "Character":
        obj = cls.__new__(cls)
        obj._terms = {w: c for w, c in terms.items() if c}
        return obj

    @classmethod
    def zero(cls) -> "Character":
        return cls._raw({})

    @classmethod
    def monomial(cls, weight: Weight, coeff: int = 1) -> "Character":
        return cls._raw({weight: coeff})

    def items(self):
        return self._terms.items()

    def weights(self):
        return self._terms.keys()

    def coefficient(self, weight: Weight) -> int:
        return self._terms.get(weight, 0)

    def __getitem__(self, weight):
        return self.coefficient(weight)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other):
        if isinstance(other, Character):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return Character._raw(out)

    def __sub__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Character._raw({w: -c for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return Character._raw({w: other * c for w, c in self._terms.items()})
        if not isinstance(other, Character):
            return NotImplemented
        if not self._terms or not other._terms:
            return Character.zero()
        shape = next(iter(self._terms))
        left = [(_pack(w.coords), c) for w, c in self._terms.items()]
        right = [(_pack(w.coords), c) for w, c in other._terms.items()]
        acc: dict[int, int] = defaultdict(int)
        for k1, c1 in left:
            for k2, c2 in right:
                acc[k1 + k2] += c1 * c2
        size = shape.m + shape.n
        return Character._raw({Weight.from_coords(_unpack(k, size), shape.m): c for k, c in acc.items()})

    __rmul__ = __mul__

    def shift(self, weight: Weight) -> "Character":
        """Multiply by ``e^weight``."""
        return Character._raw({w + weight: c for w, c in self._terms.items()})

    def dual(self) -> "Character":
        return Character._raw({-w: c for w, c in self._terms.items()})

    def dim(self) -> int:
        """Evaluate at ``e^mu = 1``."""
        return sum(self._terms.values())

    def restrict(self, keep: Callable[[Weight], bool]) -> "Character":
        return Character._raw({w: c for w, c in self._terms.items() if keep(w)})

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def sorted_terms(self) -> list[tuple[Weight, int]]:
        """Terms in descending lexicographic order on (delta block, eps block)."""
        return sorted(self._terms.items(), key=lambda t: (t[0].delta, t[0].eps), reverse=True)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return "\n".join(f"{c} * e[{w}]" for w, c in self.sorted_terms())

    def to_json(self, m: int, n: int) -> dict:
        return {
            "m": m,
            "n": n,
            "terms": [
                {"weight": {"delta": list(w.delta), "eps": list(w.eps)}, "coeff": c}
                for w, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Character":
        terms = []
        for t in obj["terms"]:
            w = Weight(tuple(t["weight"]["delta"]), tuple(t["weight"]["eps"]))
            if len(w.delta) != obj["m"] or len(w.eps) != obj["n"]:
                raise ValueError("term weight does not match the declared shape")
            terms.append((w, int(t["coeff"])))
        return cls(terms)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        inner = " + ".join(f"{c}*e[{w}]" for w, c in self.sorted_terms()) or "0"
        return f"Character({inner})"


# --- even Weyl characters ---------------------------------------------------


@lru_cache(maxsize=4096)
def _gl_schur(lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Character of the GL(k) module with dominant highest weight ``lam``.

    Gelfand-Tsetlin branching to GL(k-1); entries may be negative.
    """
    k = len(lam)
    if k == 0:
        return {(): 1}
    if k == 1:
        return {(lam[0],): 1}
    total = sum(lam)
    out: dict[tuple[int, ...], int] = defaultdict(int)
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(k - 1)]
    for mu in itertools.product(*ranges):
        xk = total - sum(mu)
        for expo, c in _gl_schur(mu).items():
            out[expo + (xk,)] += c
    return dict(out)


def schur_even(ctx: GLContext, lam: Weight) -> Character:
    """``W(lam)``: the character of the even induced module; zero if ``lam`` is not dominant."""
    ctx.check_weight(lam)
    if not is_dominant(ctx, lam):
        return Character.zero()
    return _schur_even_cached(lam)


@lru_cache(maxsize=8192)
def _schur_even_cached(lam: Weight) -> Character:
    left = _gl_schur(lam.delta)
    right = _gl_schur(lam.eps)
    return Character._raw({Weight(a, b): ca * cb for a, ca in left.items() for b, cb in right.items()})


def _poly_mul(p, q):
    out = defaultdict(int)
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
    return {e: c for e, c in out.items() if c}


def _divide_by_difference(poly, i, j):
    """Exact quotient of ``poly`` by ``x_i - x_j``; raises if not divisible."""
    by_rest = defaultdict(dict)
    for e, c in poly.items():
        rest = e[:i] + (0,) + e[i + 1 :]
        by_rest[rest][e[i]] = c
    # P = sum_d c_d x_i^d with c_d in the other variables; synthetic division at x_i = x_j
    coeffs = defaultdict(lambda: defaultdict(int))
    for rest, by_deg in by_rest.items():
        for d, c in by_deg.items():
            coeffs[d][rest] += c
    if not coeffs:
        return {}
    top = max(coeffs)
    quotient = defaultdict(int)
    carry: dict = {}
    for d in range(top, 0, -1):
        cur = defaultdict(int, coeffs.get(d, {}))
        for e, c in carry.items():
            shifted = list(e)
            shifted[j] += 1
            cur[tuple(shifted)] += c
        cur = {e: c for e, c in cur.items() if c}
        for e, c in cur.items():
            q = list(e)
            q[i] = d - 1
            quotient[tuple(q)] += c
        carry = cur
    rem = defaultdict(int, coeffs.get(0, {}))
    for e, c in carry.items():
        shifted = list(e)
        shifted[j] += 1
        rem[tuple(shifted)] += c
    if any(rem.values()):
        raise ArithmeticError("alternant is not divisible by the Vandermonde factor")
    return {e: c for e, c in quotient.items() if c}


def _alternant_block(lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    k = len(lam)
    if k == 0:
        return {(): 1}
    shifted = [lam[a] + (k - 1 - a) for a in range(k)]
    low = min(shifted)
    shifted = [x - low for x in shifted]
    numerator = defaultdict(int)
    for perm in itertools.permutations(range(k)):
        inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        expo = [0] * k
        for a, target in enumerate(perm):
            expo[target] = shifted[a]
        numerator[tuple(expo)] += -1 if inv % 2 else 1
    poly = {e: c for e, c in numerator.items() if c}
    for a in range(k):
        for b in range(a + 1, k):
            poly = _divide_by_difference(poly, a, b)
    # undo the shift by the smallest entry and by the Vandermonde degree
    return {tuple(x + low for x in e): c for e, c in poly.items()}


def weyl_character_alternant(ctx: GLContext, lam: Weight) -> Character:
    """``A(lam + rho_0) / A(rho_0)`` by exact polynomial division (slow cross-check path)."""
    ctx.check_weight(lam)
    if not is_dominant(ctx, lam):
        return Character.zero()
    left = _alternant_block(lam.delta)
    right = _alternant_block(lam.eps)
    return Character._raw({Weight(a, b): ca * cb for a, ca in left.items() for b, cb in right.items()})


def weyl_dimension(ctx: GLContext, lam: Weight) -> int:
    """Dimension of the even induced module by the product formula."""
    if not is_dominant(ctx, lam):
        return 0
    num = den = 1
    for block in (lam.delta, lam.eps):
        k = len(block)
        for a in range(k):
            for b in range(a + 1, k):
                num *= block[a] - block[b] + b - a
                den *= b - a
    return num // den


# --- odd factors and induced modules ---------------------------------------


@lru_cache(maxsize=None)
def _xi_cached(ctx: GLContext, signs: tuple[int, ...]) -> Character:
    result = Character.monomial(ctx.zero())
    for s, beta in zip(signs, ctx.odd_positive_roots):
        gamma = beta.as_weight() if s > 0 else -beta.as_weight()
        result = result * Character._raw({ctx.zero(): 1, -gamma: 1})
    return result


def xi_product(ctx: GLContext, support: OddPositiveSet | int) -> Character:
    """``prod (1 + e^{-gamma})`` over the positive odd roots ``gamma`` of ``support``.

    An integer argument is read as a chain index.
    """
    if isinstance(support, int):
        support = xi_support(ctx, support)
    return _xi_cached(ctx, tuple(support.signs))


def euler_chi0(ctx: GLContext, mu: Weight) -> Character:
    """Even Euler characteristic, via the dominant conjugate of ``mu + rho_0``."""
    ctx.check_weight(mu)
    rho0 = rho_vectors(ctx)[0]
    found = make_dominant_regular(ctx, as_half(mu) + rho0)
    if found is None:
        return Character.zero()
    w, dom = found
    return w.sign() * schur_even(ctx, (dom - rho0).to_weight())


@lru_cache(maxsize=4096)
def _chi_dominant(ctx: GLContext, lam: Weight) -> Character:
    return schur_even(ctx, lam) * xi_product(ctx, 0)


def euler_chi(ctx: GLContext, mu: Weight) -> Character:
    ctx.check_weight(mu)
    rho0 = rho_vectors(ctx)[0]
    found = make_dominant_regular(ctx, as_half(mu) + rho0)
    if found is None:
        return Character.zero()
    w, dom = found
    return w.sign() * _chi_dominant(ctx, (dom - rho0).to_weight())


def euler_chi_chain(ctx: GLContext, i: int, mu: Weight) -> Character:
    """Euler characteristic of the line bundle ``mu`` on ``G/B^(i)``.

    Each monomial ``e^gamma`` of ``Xi_i`` contributes ``chi_0(mu + gamma)``.
    For i = 0 and i = mn the factor is W-invariant and this is ``chi_0(mu) Xi_i``.
    """
    ctx.check_weight(mu)
    return euler_apply(ctx, xi_product(ctx, i).shift(mu))


def euler_apply(ctx: GLContext, formal: Character) -> Character:
    """Extend ``e^mu -> chi_0(mu)`` linearly to an arbitrary formal sum."""
    acc: dict[Weight, int] = defaultdict(int)
    for mu, c in formal.items():
        for w, d in euler_chi0(ctx, mu).items():
            acc[w] += c * d
    return Character._raw(acc)


def ch_h0(ctx: GLContext, lam: Weight) -> Character:
    """Character of ``H^0(lam) = ind_B^G lam``: ``W(lam) * Xi``."""
    return schur_even(ctx, lam) * xi_product(ctx, 0)


def ch_weyl(ctx: GLContext, lam: Weight) -> Character:
    """Character of the Weyl module V(lam), computed as a dual.

    V(lam) is dual to the induced module of ``k_{-w0 lam}`` tensored with the
    odd exterior algebra, whose character is ``W(-w0 lam) * prod(1 + e^beta)``.
    """
    ctx.check_weight(lam)
    if not is_dominant(ctx, lam):
        return Character.zero()
    w0 = longest_element(ctx)
    dual_lam = -act(w0, lam)
    return (schur_even(ctx, dual_lam) * xi_product(ctx, ctx.m * ctx.n)).dual()


def ch_h0_chain(ctx: GLContext, i: int, mu: Weight) -> Character:
    """Character of ``H^0(G/B^(i), mu)``: ``W(mu) * Xi_i``."""
    return schur_even(ctx, mu) * xi_product(ctx, i)


def ch_total(ctx: GLContext, lam: Weight) -> Character:
    """Character of the totally-odd induced module of ``lam``."""
    if not is_dominant(ctx, lam):
        raise NotDominantError(f"{lam} is not dominant", weight=str(lam))
    base = lam - two_rho1(ctx)
    if not is_dominant(ctx, base):
        warnings.warn(f"{base} = lam - 2 rho_1 is not dominant", NonDominantWarning)
        return Character.zero()
    return ch_h0_chain(ctx, ctx.m * ctx.n, base)


def ch_kac(ctx: GLContext, lam: Weight, even_char: Character) -> Character:
    """Kac module character ``Xi * ch L_ev(lam)``; the even character is supplied by the caller."""
    ctx.check_weight(lam)
    return xi_product(ctx, 0) * even_char
