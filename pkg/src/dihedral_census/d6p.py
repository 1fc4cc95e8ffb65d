"""Closed forms for n = 3p, p > 3 prime.

Throughout, ``t`` is a divisor representative in ``{1, 3, p, 3p}``; reduce an
arbitrary ``t'`` with :func:`representative` first. ``d`` ranges over the same
divisor set.
"""
from dataclasses import dataclass
from math import gcd

from .arith import divisors_of, euler_phi, exact_div, is_prime, mult_order
from .dihedral import kappa
from .errors import DomainError, InvalidAutomorphism, NotApplicable


@dataclass(frozen=True)
class D6pParams:
    p: int

    def __post_init__(self):
        if self.p <= 3 or not is_prime(self.p):
            raise NotApplicable(f"p={self.p} must be a prime >= 5")

    @property
    def n(self):
        return 3 * self.p

    @property
    def divisors(self):
        return (1, 3, self.p, 3 * self.p)


@dataclass(frozen=True)
class LambdaSet:
    d: int
    members: frozenset[int]


def proper_divisors(m: int) -> set[int]:
    """Divisors of ``m`` strictly below ``m``."""
    return {ell for ell in divisors_of(m) if ell < m}


def representative(p: int, t: int) -> int:
    """``gcd(t, 3p)``; ``t == 0`` maps to ``3p``."""
    return gcd(t, 3 * p)


def _validate(p, d, r, t):
    params = D6pParams(p)
    if d not in params.divisors:
        raise DomainError(f"d={d} is not one of {params.divisors}")
    if t not in params.divisors:
        raise DomainError(f"t={t} is not one of {params.divisors}")
    if gcd(r, params.n) != 1:
        raise InvalidAutomorphism(f"gcd({r}, {params.n}) != 1")
    return params.n


def lambda_set(p: int, d: int, r: int, t: int) -> LambdaSet:
    _validate(p, d, r, t)
    op = mult_order(r, p)
    r_mod3 = r % 3
    if d == 1:
        members = set() if r_mod3 == 1 else {ell for ell in proper_divisors(op) if ell % 2}
    elif d == 3:
        if r_mod3 == 2:
            members = proper_divisors(op // gcd(2, op))
        elif t in (3, 3 * p):
            members = proper_divisors(op)
        else:
            members = proper_divisors(op // gcd(3, op))
    elif d == p:
        members = {1} if r_mod3 == 2 and op % 2 else set()
    else:
        members = {1}
    return LambdaSet(d, frozenset(members))


def lambda_set_direct(p: int, d: int, r: int, t: int) -> LambdaSet:
    """Filter the divisors of ``|r|_3p / gcd(kappa(d,r,t), |r|_3p)`` by the defining gcd condition."""
    n = _validate(p, d, r, t)
    order_n = mult_order(r, n)
    kd = kappa(d, r, t)
    bound = order_n // gcd(kd, order_n)
    members = {ell for ell in divisors_of(bound) if gcd(pow(r, ell * kd, n) - 1, n) == d}
    return LambdaSet(d, frozenset(members))


def s_sum(p: int, d: int, r: int, t: int) -> int:
    _validate(p, d, r, t)
    op = mult_order(r, p)
    r_mod3 = r % 3
    if d == 3 * p:
        return 3 * p
    if d == p:
        return p if r_mod3 == 2 and op % 2 else 0
    if d == 1:
        if r_mod3 == 1:
            return 0
        return op - 1 if op % 2 else op // 2
    # d == 3; the branch list mirrors the published table, duplicates included
    if r_mod3 == 1 and t in (3, 3 * p):
        return 3 * (op - 1)
    if r_mod3 == 1 and op % 3:
        return 3 * (op - 1)
    if r_mod3 == 1:
        return op - 3
    if op % 2:
        return 3 * (op - 1)
    return 3 * (op // 2 - 1)


def s_sum_direct(p: int, d: int, r: int, t: int) -> int:
    n = 3 * p
    lam = lambda_set_direct(p, d, r, t)
    order_n = mult_order(r, n)
    g = gcd(kappa(d, r, t), order_n)
    return sum(d * euler_phi(exact_div(order_n, ell * g)) for ell in lam.members)


def kappa_3p(p: int, r: int, t: int) -> int:
    """Piecewise order of ``a_{3p,r,t}`` for a divisor representative ``t``."""
    n = _validate(p, 1, r, t)
    r %= n
    op = mult_order(r, p)
    if r == 1:
        return n // gcd(n, t)
    if r % 3 == 1:
        return 3 * op // gcd(3, t * op)
    if r % p == 1:
        return 2 * p // gcd(p, t)
    return 2 * op // gcd(2, op)


def c_u3p(p: int, r: int) -> int:
    n = D6pParams(p).n
    if gcd(r, n) != 1:
        raise InvalidAutomorphism(f"gcd({r}, {n}) != 1")
    op = mult_order(r, p)
    if r % 3 == 1:
        return 2 + exact_div(3 * (p - 1), op)
    if op % 2:
        return 1 + exact_div(2 * (p - 1), op)
    return 1 + exact_div(3 * (p - 1), op)


def c_v3p(p: int, r: int, t: int) -> int:
    n = _validate(p, 1, r, t)
    r %= n
    op = mult_order(r, p)
    if r == 1:
        return gcd(n, t)
    if r % 3 == 1:
        if t in (3, n):
            return 3 + exact_div(3 * (p - 1), op)
        if op % 3:
            return 1 + exact_div(p - 1, op)
        return 1 + exact_div(3 * (p - 1), op)
    if r % p == 1:
        return 2 * gcd(p, t)
    if op % 2:
        return 2 + exact_div(2 * (p - 1), op)
    return 2 + exact_div(3 * (p - 1), op)


def d6p_count(p: int) -> int:
    """Number of non-isomorphic Cayley digraphs on D_6p.

    The five terms of the closed form are brought over the common denominator
    ``3p(p-1)`` and divided once; the terms are not integers individually.
    """
    n = D6pParams(p).n
    a_sum = b_sum = odd_sum = even_sum = 0
    for r in range(2, n):
        if gcd(r, n) != 1:
            continue
        o3, op = mult_order(r, 3), mult_order(r, p)
        if o3 == 1 and op % 3:
            a_sum += 2 ** (4 * (p - 1) // op) + 2 ** (1 + 6 * (p - 1) // op)
        elif o3 == 1:
            b_sum += 2 ** (6 * (p - 1) // op)
        elif op % 2 and op > 1:
            odd_sum += 2 ** (4 * (p - 1) // op)
        elif op % 2 == 0:
            even_sum += 2 ** (6 * (p - 1) // op)
    numerator = (
        2 ** (4 * p - 2) * (2 ** (2 * p) + 5)
        + 3 * (p - 1) * 2 ** (2 * p) * (2**p + 1)
        + 8 * p * a_sum
        + 24 * p * b_sum
        + 12 * p * (odd_sum + even_sum)
    )
    return exact_div(numerator, 3 * p * (p - 1))
