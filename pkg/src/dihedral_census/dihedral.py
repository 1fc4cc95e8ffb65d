"""The dihedral group D_2n, its automorphisms a_{n,r,t} and their algebra.

Automorphisms act on the right: ``compose(a, b)`` applies ``a`` first and then
``b``, which makes ``compose(a_{n,r,t}, a_{n,r',t'}) == a_{n, r r', r' t + t'}``.

Points of D_2n minus the identity are indexed as follows: ``0 .. n-2`` are the
rotations ``u^1 .. u^(n-1)`` and ``n-1 .. 2n-2`` are the reflections
``v, uv, ..., u^(n-1) v``.
"""
from dataclasses import dataclass
from math import gcd

from .arith import euler_phi, geom_sum_mod, mult_order
from .errors import DomainError, InvalidAutomorphism


@dataclass(frozen=True, slots=True)
class Element:
    """``u^exponent`` or, if ``reflection`` is set, ``u^exponent v``."""

    n: int
    exponent: int
    reflection: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be positive, got {self.n}")
        object.__setattr__(self, "exponent", self.exponent % self.n)

    @property
    def is_identity(self):
        return not self.reflection and self.exponent == 0

    def index(self) -> int:
        """Position in the fixed indexing of the non-identity elements."""
        if self.reflection:
            return self.n - 1 + self.exponent
        if self.exponent == 0:
            raise DomainError("the identity has no index")
        return self.exponent - 1

    @classmethod
    def from_index(cls, n: int, k: int) -> "Element":
        if not 0 <= k < 2 * n - 1:
            raise DomainError(f"index {k} out of range for n={n}")
        if k < n - 1:
            return cls(n, k + 1, False)
        return cls(n, k - (n - 1), True)

    def __str__(self):
        if self.is_identity:
            return "1"
        if self.exponent == 0:
            return "v"
        base = "u" if self.exponent == 1 else f"u^{self.exponent}"
        return base + "v" if self.reflection else base


def rotation(n: int, i: int) -> Element:
    return Element(n, i, False)


def reflection(n: int, j: int) -> Element:
    return Element(n, j, True)


@dataclass(frozen=True, slots=True)
class Aut:
    """The automorphism ``a_{n,r,t}``; build validated instances with :func:`make_aut`."""

    n: int
    r: int
    t: int

    @classmethod
    def identity(cls, n):
        return cls(n, 1 % n, 0)

    @property
    def is_identity(self):
        return self.r == 1 % self.n and self.t == 0

    def __str__(self):
        return f"a_{{{self.n},{self.r},{self.t}}}"


@dataclass(frozen=True, slots=True)
class Permutation:
    """``image[k]`` is the index of the image of point ``k``."""

    image: tuple[int, ...]

    @property
    def size(self):
        return len(self.image)


def make_aut(n: int, r: int, t: int) -> Aut:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if gcd(r % n, n) != 1:
        raise InvalidAutomorphism(f"gcd({r}, {n}) != 1")
    return Aut(n, r % n, t % n)


def _same_n(a, b):
    if a.n != b.n:
        raise DomainError(f"mismatched group parameters {a.n} and {b.n}")


def apply(a: Aut, g: Element) -> Element:
    _same_n(a, g)
    if g.reflection:
        return Element(a.n, a.r * g.exponent + a.t, True)
    return Element(a.n, a.r * g.exponent, False)


def compose(a: Aut, b: Aut) -> Aut:
    """``a`` then ``b``."""
    _same_n(a, b)
    n = a.n
    return Aut(n, a.r * b.r % n, (b.r * a.t + b.t) % n)


def power(a: Aut, s: int) -> Aut:
    """``a^s`` via the closed form ``a_{n, r^s, t S_s(r)}``."""
    if s < 0:
        raise DomainError(f"negative exponent {s}")
    n = a.n
    return Aut(n, pow(a.r, s, n), a.t * geom_sum_mod(a.r, s, n) % n)


def kappa(n: int, r: int, t: int) -> int:
    """``n |r|_n / gcd(n, t S_{|r|_n}(r))``, the order of ``a_{n,r,t}``."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if gcd(r, n) != 1:
        raise InvalidAutomorphism(f"gcd({r}, {n}) != 1")
    k = mult_order(r, n)
    return n * k // gcd(n, t * geom_sum_mod(r, k, n) % n)


def aut_order(a: Aut) -> int:
    return kappa(a.n, a.r, a.t)


def enumerate_aut(n: int) -> list[Aut]:
    """All ``n * phi(n)`` automorphisms, ordered by ``r`` and then ``t``."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return [Aut(n, r % n, t) for r in range(n) if gcd(r, n) == 1 for t in range(n)]


def aut_group_order(n: int) -> int:
    return n * euler_phi(n)


def to_permutation(a: Aut) -> Permutation:
    n, r, t = a.n, a.r, a.t
    if n < 2:
        raise DomainError("D_2n^# needs n >= 2 for the permutation action")
    rot = [(r * i) % n - 1 for i in range(1, n)]
    ref = [n - 1 + (r * j + t) % n for j in range(n)]
    return Permutation(tuple(rot + ref))


def conjugation_invariance_check(n: int, r: int, t: int, x: int, y: int) -> bool:
    """Whether conjugating by ``a_{n,x,y}`` preserves the order of ``a_{n,r,t}``."""
    if gcd(r, n) != 1 or gcd(x, n) != 1:
        raise DomainError(f"r={r} and x={x} must both be units modulo {n}")
    return kappa(n, r, t) == kappa(n, r, ((1 - r) * y + x * t) % n)
