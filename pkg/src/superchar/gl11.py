"""Explicit GL(1|1) computations over Grassmann coefficient rings.

Points of GL(1|1) with values in a Grassmann algebra act on the
two-dimensional induced modules H^0_{+beta}(lam) (basis Y, C) and
H^0_{-beta}(lam) (basis B, X).  The integral map between them gives the
Jantzen sum for GL(1|1) directly, which serves as an oracle for the general
formula.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from .charring import Character
from .errors import AtypicalError, ContextError, RangeError, SingularMatrixError
from .root_data import Weight, is_prime

__all__ = [
    "BaseRing",
    "GrassmannNumber",
    "GL11Point",
    "diagonal",
    "upper",
    "lower",
    "InducedGL11",
    "InducedElement",
    "act",
    "LinearMap",
    "map_T",
    "map_Tprime",
    "map_Upsilon",
    "composition_analysis",
    "jantzen_oracle",
    "family_points",
]


# --- coefficient rings ------------------------------------------------------


@dataclass(frozen=True)
class BaseRing:
    """``ZZ``, ``QQ`` or ``GF(p)``."""

    tag: str = "ZZ"
    p: int | None = None

    def __post_init__(self):
        if self.tag not in ("ZZ", "QQ", "GF"):
            raise ContextError(f"unknown base ring {self.tag}")
        if self.tag == "GF" and (self.p is None or not is_prime(self.p)):
            raise ContextError(f"GF needs a prime, got {self.p}")

    @classmethod
    def integers(cls):
        return cls("ZZ")

    @classmethod
    def rationals(cls):
        return cls("QQ")

    @classmethod
    def mod(cls, p: int):
        return cls("GF", p)

    def norm(self, c):
        if self.tag == "GF":
            return int(c) % self.p
        if self.tag == "QQ":
            return Fraction(c)
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"{c} is not an integer")
            return int(c)
        return int(c)

    def is_unit(self, c) -> bool:
        if self.tag == "ZZ":
            return c in (1, -1)
        return self.norm(c) != 0

    def inv(self, c):
        if not self.is_unit(c):
            raise SingularMatrixError(f"{c} is not a unit in {self}")
        if self.tag == "GF":
            return pow(int(c), -1, self.p)
        if self.tag == "QQ":
            return 1 / Fraction(c)
        return c

    def __str__(self):
        return f"GF({self.p})" if self.tag == "GF" else self.tag


def _mono_sign(a: int, b: int) -> int:
    """Sign of xi_A * xi_B after sorting; 0 if the sets overlap."""
    if a & b:
        return 0
    swaps = 0
    for k in range(b.bit_length()):
        if b >> k & 1:
            # generators of A with larger index than k must pass it
            swaps += bin(a >> (k + 1)).count("1")
    return -1 if swaps % 2 else 1


class GrassmannNumber:
    """An element of the exterior algebra on ``r`` generators over a base ring.

    Coefficients are keyed by bitmasks of generator subsets.
    """

    __slots__ = ("r", "ring", "_c")

    def __init__(self, coeffs: dict[int, object] | None = None, r: int = 2, ring: BaseRing | None = None):
        self.r = r
        self.ring = ring or BaseRing()
        out = {}
        for mask, c in (coeffs or {}).items():
            if mask >> r:
                raise RangeError(f"monomial {mask:b} uses more than {r} generators")
            c = self.ring.norm(c)
            if c:
                out[mask] = c
        self._c = out

    @classmethod
    def scalar(cls, c, r: int = 2, ring: BaseRing | None = None):
        return cls({0: c}, r, ring)

    @classmethod
    def generator(cls, k: int, r: int = 2, ring: BaseRing | None = None, coeff=1):
        """``coeff * xi_k`` for 1 <= k <= r."""
        if not 1 <= k <= r:
            raise RangeError(f"generator index {k} outside 1..{r}")
        return cls({1 << (k - 1): coeff}, r, ring)

    def _like(self, coeffs):
        return GrassmannNumber(coeffs, self.r, self.ring)

    def _coerce(self, other):
        if isinstance(other, GrassmannNumber):
            if other.r != self.r or other.ring != self.ring:
                raise ContextError("Grassmann numbers live in different algebras")
            return other
        return self._like({0: other})

    @property
    def coeffs(self) -> dict[int, object]:
        return dict(self._c)

    def body(self):
        return self._c.get(0, self.ring.norm(0))

    def is_zero(self) -> bool:
        return not self._c

    def is_even(self) -> bool:
        return all(bin(k).count("1") % 2 == 0 for k in self._c)

    def is_odd(self) -> bool:
        return all(bin(k).count("1") % 2 == 1 for k in self._c)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._c)
        for k, c in other._c.items():
            out[k] = out.get(k, 0) + c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[int, object] = {}
        for a, ca in self._c.items():
            for b, cb in other._c.items():
                s = _mono_sign(a, b)
                if s:
                    out[a | b] = out.get(a | b, 0) + s * ca * cb
        return self._like(out)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __eq__(self, other):
        if isinstance(other, GrassmannNumber):
            return self.r == other.r and self.ring == other.ring and self._c == other._c
        try:
            return self._c == self._coerce(other)._c
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.r, self.ring, frozenset(self._c.items())))

    def inverse(self) -> "GrassmannNumber":
        """Inverse of an even element with unit body: ``b^-1 sum (-N b^-1)^k``."""
        if not self.is_even():
            raise SingularMatrixError("only even elements are inverted")
        b = self.body()
        binv = self.ring.inv(b)
        nil = (self - b) * binv
        term = self._like({0: 1})
        total = term
        for _ in range(self.r // 2 + 1):
            term = term * (-nil)
            if term.is_zero():
                break
            total = total + term
        return total * binv

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inverse()
        out = self._like({0: 1})
        for _ in range(abs(k)):
            out = out * base
        return out

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c, key=lambda x: (bin(x).count("1"), x)):
            gens = "".join(f"x{t + 1}" for t in range(self.r) if k >> t & 1)
            parts.append(f"{self._c[k]}{'*' + gens if gens else ''}")
        return " + ".join(parts)

    __repr__ = __str__


# --- points of GL(1|1) ------------------------------------------------------


@dataclass(frozen=True)
class GL11Point:
    """The matrix ``(a, m; n, b)`` with ``a, b`` even units and ``m, n`` odd."""

    a: GrassmannNumber
    m: GrassmannNumber
    n: GrassmannNumber
    b: GrassmannNumber

    def __post_init__(self):
        if not (self.a.is_even() and self.b.is_even()):
            raise ContextError("diagonal entries must be even")
        if not (self.m.is_odd() and self.n.is_odd()):
            raise ContextError("off-diagonal entries must be odd")
        for x in (self.a, self.b):
            if not x.ring.is_unit(x.body()):
                raise SingularMatrixError(f"diagonal entry {x} has non-invertible body")

    def __mul__(self, other: "GL11Point") -> "GL11Point":
        return GL11Point(
            self.a * other.a + self.m * other.n,
            self.a * other.m + self.m * other.b,
            self.n * other.a + self.b * other.n,
            self.n * other.m + self.b * other.b,
        )

    def factor(self) -> tuple["GL11Point", "GL11Point", "GL11Point"]:
        """``(L, D, U)`` with ``self = L D U``, L lower and U upper unitriangular."""
        ainv = self.a.inverse()
        one = self.a ** 0
        zero = self.m * 0
        low = GL11Point(one, zero, self.n * ainv, one)
        dia = GL11Point(self.a, zero, zero, self.b - self.n * ainv * self.m)
        up = GL11Point(one, ainv * self.m, zero, one)
        return low, dia, up

    def kind(self) -> str:
        if self.m.is_zero() and self.n.is_zero():
            return "diagonal"
        if self.n.is_zero():
            return "upper"
        if self.m.is_zero():
            return "lower"
        return "general"


def _as_gn(x, like: GrassmannNumber):
    return x if isinstance(x, GrassmannNumber) else like._like({0: x})


def diagonal(a: GrassmannNumber, b) -> GL11Point:
    b = _as_gn(b, a)
    return GL11Point(a, a * 0, a * 0, b)


def upper(a: GrassmannNumber, m: GrassmannNumber, b) -> GL11Point:
    a, b = _as_gn(a, m), _as_gn(b, m)
    return GL11Point(a, m, m * 0, b)


def lower(a: GrassmannNumber, n: GrassmannNumber, b) -> GL11Point:
    a, b = _as_gn(a, n), _as_gn(b, n)
    return GL11Point(a, n * 0, n, b)


# --- the two-dimensional induced modules -----------------------------------


@dataclass(frozen=True)
class InducedGL11:
    """``H^0_{+beta}(lam)`` (basis Y, C) or ``H^0_{-beta}(lam)`` (basis B, X)."""

    orientation: int
    i: int
    j: int

    def __post_init__(self):
        if self.orientation not in (1, -1):
            raise ValueError("orientation is +1 or -1")

    @property
    def labels(self) -> tuple[str, str]:
        return ("Y", "C") if self.orientation > 0 else ("B", "X")

    @property
    def lam(self) -> Weight:
        return Weight((self.i,), (self.j,))

    def weights(self) -> tuple[Weight, Weight]:
        lam, beta = self.lam, Weight((1,), (-1,))
        return (lam, lam + beta) if self.orientation > 0 else (lam - beta, lam)

    def element(self, c0, c1) -> "InducedElement":
        return InducedElement(self, (c0, c1))

    def basis(self, like: GrassmannNumber) -> tuple["InducedElement", "InducedElement"]:
        one, zero = like ** 0, like * 0
        return self.element(one, zero), self.element(zero, one)

    def __str__(self):
        sign = "+" if self.orientation > 0 else "-"
        return f"H0[{sign}beta]({self.i}|{self.j})"


@dataclass(frozen=True)
class InducedElement:
    module: InducedGL11
    coeffs: tuple[GrassmannNumber, GrassmannNumber]

    def __add__(self, other):
        return InducedElement(self.module, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "InducedElement":
        """Right multiplication ``v c``."""
        return InducedElement(self.module, tuple(x * c for x in self.coeffs))

    def __eq__(self, other):
        return isinstance(other, InducedElement) and self.module == other.module and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.module, self.coeffs))

    def __str__(self):
        return " + ".join(f"({c}){lab}" for c, lab in zip(self.coeffs, self.module.labels))


def _images(g: GL11Point, mod: InducedGL11):
    """Columns ``g(e_0), g(e_1)`` for a generator-family point."""
    a, m, n, b = g.a, g.m, g.n, g.b
    i, j = mod.i, mod.j
    s = i + j
    zero = a * 0
    kind = g.kind()
    if kind == "general":
        raise ValueError("general points act through their factorization")
    if mod.orientation > 0:
        # Y has weight lam, C has weight lam + beta
        y = (a**i * b**j, s * m * a**i * b ** (j - 1))
        c = (n * a**i * b ** (j - 1), a ** (i + 1) * b ** (j - 1))
        return y, c
    # B has weight lam - beta, X has weight lam
    bb = (a ** (i - 1) * b ** (j + 1), m * a ** (i - 1) * b**j)
    x = (s * n * a ** (i - 1) * b**j, a**i * b**j)
    return bb, x


def act(g: GL11Point, v: InducedElement) -> InducedElement:
    """``g . v``.

    Elements are ``e_0 c_0 + e_1 c_1`` with coefficients to the right of the
    basis, so the action matrix multiplies the coefficient column from the
    left.  With left coefficients the odd entries would need sign twists.
    """
    if g.kind() == "general":
        low, dia, up = g.factor()
        return act(low, act(dia, act(up, v)))
    cols = _images(g, v.module)
    out = [v.coeffs[0] * 0, v.coeffs[0] * 0]
    for c, col in zip(v.coeffs, cols):
        for row in range(2):
            out[row] = out[row] + col[row] * c
    return InducedElement(v.module, tuple(out))


# --- intertwiners -----------------------------------------------------------


@dataclass(frozen=True)
class LinearMap:
    """An integer matrix between two modules; columns are images of the source basis."""

    source: InducedGL11
    target: InducedGL11
    matrix: tuple[tuple[int, int], tuple[int, int]]

    def __call__(self, v: InducedElement) -> InducedElement:
        if v.module != self.source:
            raise ValueError(f"map is defined on {self.source}, not {v.module}")
        zero = v.coeffs[0] * 0
        out = []
        for row in self.matrix:
            acc = zero
            for c, entry in zip(v.coeffs, row):
                acc = acc + c * entry
            out.append(acc)
        return InducedElement(self.target, tuple(out))

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if other.target != self.source:
            raise ValueError("maps do not compose")
        prod = Matrix(self.matrix) * Matrix(other.matrix)
        return LinearMap(other.source, self.target, tuple(tuple(int(x) for x in prod.row(r)) for r in range(2)))

    def sympy(self) -> Matrix:
        return Matrix(self.matrix)


def map_T(i: int, j: int) -> LinearMap:
    """``H^0_{-beta}(lam + beta) -> H^0_{+beta}(lam)``: B -> Y, X -> (i + j) C."""
    return LinearMap(InducedGL11(-1, i + 1, j - 1), InducedGL11(1, i, j), ((1, 0), (0, i + j)))


def map_Tprime(i: int, j: int) -> LinearMap:
    """``H^0_{+beta}(lam) -> H^0_{-beta}(lam + beta)``: Y -> (i + j) B, C -> X."""
    return LinearMap(InducedGL11(1, i, j), InducedGL11(-1, i + 1, j - 1), ((i + j, 0), (0, 1)))


def map_Upsilon(i: int, j: int, k: int, p: int) -> LinearMap:
    """``H^0_{-beta}(lam + k beta) -> H^0_{-beta}(lam + (k-1) beta)``: B -> X, X -> 0.

    Only a module map in characteristic ``p`` dividing ``i + j``.
    """
    if (i + j) % p:
        raise RangeError(f"p={p} does not divide i + j = {i + j}", i=i, j=j, p=p)
    src = InducedGL11(-1, i + k, j - k)
    tgt = InducedGL11(-1, i + k - 1, j - k + 1)
    return LinearMap(src, tgt, ((0, 0), (1, 0)))


# --- structure over GF(p) ---------------------------------------------------


def _stable_lines(mod: InducedGL11, p: int) -> list[int]:
    """Indices of basis vectors spanning a submodule in characteristic p."""
    ring = BaseRing.mod(p)
    xi = GrassmannNumber.generator(1, 2, ring)
    one = GrassmannNumber.scalar(1, 2, ring)
    probes = [upper(one, xi, one), lower(one, xi, one)]
    stable = []
    for k in range(2):
        e = mod.basis(one)[k]
        if all(act(g, e).coeffs[1 - k].is_zero() for g in probes):
            stable.append(k)
    return stable


def composition_analysis(i: int, j: int, p: int, orientation: int = 1) -> dict:
    """Submodule structure of ``H^0_{+beta}(i|j)`` (or the -beta module) over GF(p)."""
    mod = InducedGL11(orientation, i, j)
    stable = _stable_lines(mod, p)
    weights = mod.weights()
    report = {
        "module": str(mod),
        "p": p,
        "dim": 2,
        "pairing": i + j,
        "irreducible": not stable,
    }
    if stable:
        k = stable[0]
        report["socle"] = {"basis": mod.labels[k], "weight": str(weights[k])}
        report["head"] = {"basis": mod.labels[1 - k], "weight": str(weights[1 - k])}
    return report


def jantzen_oracle(i: int, j: int, p: int) -> Character:
    """Jantzen sum of V(i|j) from Smith forms of the integral map, one weight space at a time."""
    if not is_prime(p) or p == 2:
        raise ContextError(f"p={p} is not an odd prime")
    if i + j == 0:
        raise AtypicalError(f"({i}|{j}) is atypical; the integral map is not injective", weight=f"{i}|{j}")
    # psi : H^0(lam) = H^0_{-beta}(lam) -> H^0_total(lam) = H^0_{+beta}(lam - beta)
    psi = map_T(i - 1, j + 1)
    src_w = psi.source.weights()
    tgt_w = psi.target.weights()
    out = Character.zero()
    for mu in sorted(set(src_w), key=lambda w: w.coords):
        rows = [r for r in range(2) if tgt_w[r] == mu]
        cols = [c for c in range(2) if src_w[c] == mu]
        block = Matrix([[psi.matrix[r][c] for c in cols] for r in rows])
        snf = smith_normal_form(block, domain=ZZ)
        v = 0
        for t in range(min(snf.shape)):
            d = int(snf[t, t])
            if d == 0:
                raise AtypicalError(f"zero elementary divisor at weight {mu}")
            while d % p == 0:
                d //= p
                v += 1
        out = out + Character.monomial(mu, v)
    return out


def family_points(r: int, ring: BaseRing, seeds: Iterable[int] = (2, -1)) -> list[GL11Point]:
    """Sample points from each generator family with independent Grassmann parameters."""
    one = GrassmannNumber.scalar(1, r, ring)
    pts = []
    s0, s1 = list(seeds)[:2]
    pair = 0b11
    for idx in range(1, r + 1):
        xi = GrassmannNumber.generator(idx, r, ring)
        other = GrassmannNumber.generator(idx % r + 1, r, ring)
        a = one * (1 if ring.tag == "ZZ" else s0) + GrassmannNumber({pair: 1}, r, ring)
        b = one * (-1 if ring.tag == "ZZ" else s1) + GrassmannNumber({pair: 2}, r, ring)
        pts.append(diagonal(a, b))
        pts.append(upper(a, xi + 2 * other, b))
        pts.append(lower(b, 3 * xi - other, a))
    return pts
