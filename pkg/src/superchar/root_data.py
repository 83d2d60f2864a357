"""Weight lattice, bilinear form and root data of GL(m|n).

Coordinates are ordered delta_1..delta_m followed by eps_1..eps_n.  The form
is diagonal with signature (+...+, -...-).  Half-integral vectors such as
rho are stored doubled so that everything stays integral.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import BadPrimeError, ContextError, InvalidRootError, RangeError, WeightSyntaxError

__all__ = [
    "GLContext",
    "Weight",
    "HalfWeight",
    "Root",
    "pairing",
    "coroot_pairing",
    "rho_vectors",
    "odd_root",
    "is_dominant",
    "parse_weight",
    "is_prime",
]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, slots=True)
class Weight:
    """Integral weight ``sum a_i delta_i + sum b_j eps_j``."""

    delta: tuple[int, ...]
    eps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "delta", tuple(int(x) for x in self.delta))
        object.__setattr__(self, "eps", tuple(int(x) for x in self.eps))

    @classmethod
    def from_coords(cls, coords, m: int) -> "Weight":
        coords = tuple(coords)
        return cls(coords[:m], coords[m:])

    @classmethod
    def zero(cls, m: int, n: int) -> "Weight":
        return cls((0,) * m, (0,) * n)

    @property
    def m(self) -> int:
        return len(self.delta)

    @property
    def n(self) -> int:
        return len(self.eps)

    @property
    def coords(self) -> tuple[int, ...]:
        return self.delta + self.eps

    def delta_sum(self) -> int:
        return sum(self.delta)

    def eps_sum(self) -> int:
        return sum(self.eps)

    def _check(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        if self.m != other.m or self.n != other.n:
            raise ContextError(f"weight shapes differ: {self} vs {other}")
        return other

    def __add__(self, other):
        if isinstance(other, Root):
            other = other.as_weight()
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Weight(
            tuple(a + b for a, b in zip(self.delta, other.delta)),
            tuple(a + b for a, b in zip(self.eps, other.eps)),
        )

    def __sub__(self, other):
        if isinstance(other, Root):
            other = other.as_weight()
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Weight(
            tuple(a - b for a, b in zip(self.delta, other.delta)),
            tuple(a - b for a, b in zip(self.eps, other.eps)),
        )

    def __neg__(self):
        return Weight(tuple(-a for a in self.delta), tuple(-b for b in self.eps))

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return Weight(tuple(k * a for a in self.delta), tuple(k * b for b in self.eps))

    __rmul__ = __mul__

    def __str__(self):
        return ",".join(map(str, self.delta)) + "|" + ",".join(map(str, self.eps))

    def __repr__(self):
        return f"Weight({self})"


@dataclass(frozen=True, slots=True)
class HalfWeight:
    """A vector of ``X(T) (x) Q`` with denominators dividing 2, stored as ``2*mu``."""

    doubled: tuple[int, ...]
    m: int

    @classmethod
    def from_weight(cls, w: Weight) -> "HalfWeight":
        return cls(tuple(2 * x for x in w.coords), w.m)

    @property
    def n(self) -> int:
        return len(self.doubled) - self.m

    def is_integral(self) -> bool:
        return all(x % 2 == 0 for x in self.doubled)

    def to_weight(self) -> Weight:
        if not self.is_integral():
            raise ContextError(f"{self} is not integral")
        return Weight.from_coords((x // 2 for x in self.doubled), self.m)

    def entries(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    def __add__(self, other):
        other = as_half(other)
        if len(other.doubled) != len(self.doubled) or other.m != self.m:
            raise ContextError("dimension mismatch")
        return HalfWeight(tuple(a + b for a, b in zip(self.doubled, other.doubled)), self.m)

    def __sub__(self, other):
        return self + (-as_half(other))

    def __neg__(self):
        return HalfWeight(tuple(-a for a in self.doubled), self.m)

    def __str__(self):
        def fmt(x):
            return str(x // 2) if x % 2 == 0 else f"{x}/2"

        d = self.doubled
        return ",".join(map(fmt, d[: self.m])) + "|" + ",".join(map(fmt, d[self.m :]))

    def __repr__(self):
        return f"HalfWeight({self})"


@dataclass(frozen=True, slots=True)
class Root:
    """The root ``sigma_i - sigma_j`` with 1-based indices into the m+n coordinates."""

    i: int
    j: int
    m: int
    n: int

    def __post_init__(self):
        if self.i == self.j:
            raise InvalidRootError("a root needs two distinct indices")
        size = self.m + self.n
        if not (1 <= self.i <= size and 1 <= self.j <= size):
            raise InvalidRootError(f"root indices ({self.i}, {self.j}) out of range 1..{size}")

    @property
    def is_odd(self) -> bool:
        return (self.i <= self.m) != (self.j <= self.m)

    @property
    def is_even(self) -> bool:
        return not self.is_odd

    @property
    def parity(self) -> str:
        return "odd" if self.is_odd else "even"

    def is_positive(self) -> bool:
        """Positivity in the standard system."""
        return self.i < self.j

    def __neg__(self):
        return Root(self.j, self.i, self.m, self.n)

    def as_weight(self) -> Weight:
        c = [0] * (self.m + self.n)
        c[self.i - 1] += 1
        c[self.j - 1] -= 1
        return Weight.from_coords(c, self.m)

    def _label(self, k):
        return f"d{k}" if k <= self.m else f"e{k - self.m}"

    def __add__(self, other):
        if isinstance(other, Root):
            if self.j == other.i and self.i != other.j:
                return Root(self.i, other.j, self.m, self.n)
            if other.j == self.i and other.i != self.j:
                return Root(other.i, self.j, self.m, self.n)
            raise InvalidRootError(f"{self} + {other} is not a root")
        if isinstance(other, Weight):
            return self.as_weight() + other
        return NotImplemented

    def __str__(self):
        return f"{self._label(self.i)}-{self._label(self.j)}"

    def __repr__(self):
        return f"Root({self})"


def as_half(x) -> HalfWeight:
    if isinstance(x, HalfWeight):
        return x
    if isinstance(x, Root):
        x = x.as_weight()
    if isinstance(x, Weight):
        return HalfWeight.from_weight(x)
    raise TypeError(f"cannot interpret {x!r} as a weight")


@dataclass(frozen=True)
class GLContext:
    """The supergroup GL(m|n) over a field of characteristic ``p``.

    ``p`` may be left as ``None`` for purely characteristic-free work
    (characters, Borel chains); operations that need it raise.
    """

    m: int
    n: int
    p: int | None = None

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)) or self.m < 1 or self.n < 1:
            raise ContextError(f"need m, n >= 1, got m={self.m}, n={self.n}")
        if self.p is not None and (self.p < 3 or not is_prime(self.p)):
            raise BadPrimeError(f"p must be an odd prime, got {self.p}")

    @property
    def rank(self) -> int:
        return self.m + self.n

    def require_p(self) -> int:
        if self.p is None:
            raise BadPrimeError("this operation needs a prime p")
        return self.p

    def root(self, i: int, j: int) -> Root:
        return Root(i, j, self.m, self.n)

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        r = self.rank
        return tuple(self.root(i, j) for i in range(1, r + 1) for j in range(1, r + 1) if i != j)

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(a for a in self.roots if a.i < a.j)

    @cached_property
    def even_positive_roots(self) -> tuple[Root, ...]:
        return tuple(a for a in self.positive_roots if a.is_even)

    @cached_property
    def odd_positive_roots(self) -> tuple[Root, ...]:
        """beta_1, ..., beta_mn in the canonical order."""
        return tuple(odd_root(self, i) for i in range(1, self.m * self.n + 1))

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(self.root(i, i + 1) for i in range(1, self.rank))

    @cached_property
    def _rho(self):
        m, n = self.m, self.n
        rho0 = tuple(m - 2 * i + 1 for i in range(1, m + 1)) + tuple(n - 2 * j + 1 for j in range(1, n + 1))
        rho1 = (n,) * m + (-m,) * n
        return HalfWeight(rho0, m), HalfWeight(rho1, m)

    def weight(self, delta, eps) -> Weight:
        w = Weight(tuple(delta), tuple(eps))
        self.check_weight(w)
        return w

    def check_weight(self, w) -> None:
        if w.m != self.m or w.n != self.n:
            raise ContextError(f"{w!r} does not belong to GL({self.m}|{self.n})")

    def zero(self) -> Weight:
        return Weight.zero(self.m, self.n)

    def __str__(self):
        s = f"GL({self.m}|{self.n})"
        return s if self.p is None else f"{s}, p={self.p}"


def _doubled_form(ctx: GLContext, a: HalfWeight, b: HalfWeight) -> int:
    m = ctx.m
    da, db = a.doubled, b.doubled
    return sum(x * y for x, y in zip(da[:m], db[:m])) - sum(x * y for x, y in zip(da[m:], db[m:]))


def pairing(ctx: GLContext, mu, nu) -> Fraction:
    """The invariant form ``(mu, nu)``; accepts Weight, HalfWeight or Root."""
    a, b = as_half(mu), as_half(nu)
    ctx.check_weight(a)
    ctx.check_weight(b)
    return Fraction(_doubled_form(ctx, a, b), 4)


def int_pairing(ctx: GLContext, mu, nu) -> int:
    """``pairing`` for arguments known to pair integrally; asserts divisibility."""
    a, b = as_half(mu), as_half(nu)
    ctx.check_weight(a)
    ctx.check_weight(b)
    q, r = divmod(_doubled_form(ctx, a, b), 4)
    if r:
        raise ContextError(f"({a}, {b}) is not an integer")
    return q


def coroot_pairing(ctx: GLContext, mu, alpha: Root) -> Fraction:
    """``2 (mu, alpha) / (alpha, alpha)`` for an even root ``alpha``."""
    if not isinstance(alpha, Root) or alpha.is_odd:
        raise InvalidRootError(f"{alpha} is odd; odd roots are isotropic and have no coroot")
    return 2 * pairing(ctx, mu, alpha) / pairing(ctx, alpha, alpha)


def rho_vectors(ctx: GLContext) -> tuple[HalfWeight, HalfWeight, HalfWeight]:
    """Return ``(rho_0, rho_1, rho)`` with ``rho = rho_0 - rho_1``."""
    rho0, rho1 = ctx._rho
    return rho0, rho1, rho0 - rho1


def two_rho1(ctx: GLContext) -> Weight:
    # doubled entries of rho_1 are exactly the entries of 2 rho_1
    rho1 = ctx._rho[1]
    return Weight(rho1.doubled[: ctx.m], rho1.doubled[ctx.m :])


def odd_root(ctx: GLContext, i: int) -> Root:
    """``beta_i``: delta_m - eps_1, delta_m - eps_2, ..., delta_1 - eps_n."""
    m, n = ctx.m, ctx.n
    if not 1 <= i <= m * n:
        raise RangeError(f"odd root index {i} outside 1..{m * n}")
    k, l = divmod(i - 1, n)
    return ctx.root(m - k, m + l + 1)


def is_dominant(ctx: GLContext, lam: Weight) -> bool:
    ctx.check_weight(lam)
    d, e = lam.delta, lam.eps
    return all(d[k] >= d[k + 1] for k in range(len(d) - 1)) and all(
        e[k] >= e[k + 1] for k in range(len(e) - 1)
    )


_BLOCK = r"\s*-?\d+(?:\s*,\s*-?\d+)*\s*"
_WEIGHT_RE = re.compile(rf"^({_BLOCK})\|({_BLOCK})$")


def parse_weight(text: str, ctx: GLContext | None = None) -> Weight:
    """Parse ``a1,...,am|b1,...,bn``."""
    match = _WEIGHT_RE.match(text)
    if not match:
        raise WeightSyntaxError(f"malformed weight literal {text!r}")
    delta = tuple(int(x) for x in match.group(1).split(","))
    eps = tuple(int(x) for x in match.group(2).split(","))
    w = Weight(delta, eps)
    if ctx is not None:
        if w.m != ctx.m or w.n != ctx.n:
            raise WeightSyntaxError(f"weight {text!r} does not have shape ({ctx.m}|{ctx.n})")
    return w
