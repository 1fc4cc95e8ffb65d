"""Cycle numbers of automorphisms on the non-identity elements of D_2n.

The non-identity elements split into the rotation blocks ``U_n(d)`` (the
rotations of order ``d``, one block per divisor ``d > 1``) and the reflections
``V_n``. Each block is invariant, so the cycle number is the sum over blocks.
"""
from dataclasses import dataclass, field
from math import gcd

from .arith import divisors_of, euler_phi, exact_div, geom_sum_mod, is_squarefree, mult_order
from .dihedral import kappa
from .errors import DomainError, InvalidAutomorphism, SquareFreeRequired


@dataclass(frozen=True)
class CycleData:
    n: int
    u_parts: dict[int, int] = field(hash=False)
    c_v: int

    @property
    def c_u(self) -> int:
        return sum(self.u_parts.values())

    @property
    def total(self) -> int:
        return self.c_v + self.c_u

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "u_parts": {str(d): c for d, c in sorted(self.u_parts.items())},
            "c_v": self.c_v,
            "total": self.total,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CycleData":
        obj = cls(data["n"], {int(d): c for d, c in data["u_parts"].items()}, data["c_v"])
        if "total" in data and data["total"] != obj.total:
            raise DomainError("total does not match its parts")
        return obj


def _check_unit(n, r):
    if gcd(r, n) != 1:
        raise InvalidAutomorphism(f"gcd({r}, {n}) != 1")


def c_u_part(n: int, d: int, r: int) -> int:
    """Cycles on ``U_n(d)``: ``phi(d) / |r|_d``, independent of ``t``."""
    if d <= 1 or n % d:
        raise DomainError(f"d={d} must be a divisor > 1 of n={n}")
    _check_unit(n, r)
    return exact_div(euler_phi(d), mult_order(r, d))


def c_u_total(n: int, r: int) -> int:
    return sum(c_u_part(n, d, r) for d in divisors_of(n)[1:])


def fix_v_count(n: int, r: int, t: int, s: int) -> int:
    """Number of reflections fixed by ``a_{n,r,t}^s``.

    ``a^s = a_{n, r^s, t S_s(r)}`` fixes ``u^i v`` iff ``(r^s - 1) i = -t S_s(r)``
    mod ``n``; that congruence has ``g = gcd(r^s - 1, n)`` solutions when ``g``
    divides the right-hand side and none otherwise.
    """
    g = gcd(pow(r, s, n) - 1, n)
    return g if (t * geom_sum_mod(r, s, n)) % g == 0 else 0


def c_v_general(n: int, r: int, t: int) -> int:
    """Cycles on ``V_n`` by averaging fixed points over ``<a_{n,r,t}>``.

    Powers of equal order fix equally many reflections, so the average groups
    by divisor ``s`` of the order with weight ``phi(order / s)``. Valid for
    every ``n``.
    """
    _check_unit(n, r)
    k = kappa(n, r, t)
    total = sum(euler_phi(k // s) * fix_v_count(n, r, t, s) for s in divisors_of(k))
    return exact_div(total, k)


def c_v_squarefree(n: int, r: int, t: int) -> int:
    """Cycles on ``V_n`` for square-free ``n > 1`` via the double divisor sum.

    Sums ``d * phi(|r|_n / (l * g_d))`` over divisors ``d`` of ``n`` and
    divisors ``l`` of ``|r|_n / g_d`` with ``gcd(r^(l kappa_d) - 1, n) == d``,
    where ``kappa_d = kappa(d, r, t)`` and ``g_d = gcd(kappa_d, |r|_n)``; the
    result is that sum divided by ``kappa(n, r, t)``.
    """
    if n <= 1 or not is_squarefree(n):
        raise SquareFreeRequired(f"n={n} is not a square-free integer > 1")
    _check_unit(n, r)
    order_n = mult_order(r, n)
    total = 0
    for d in divisors_of(n):
        kd = kappa(d, r, t)
        gd = gcd(kd, order_n)
        for ell in divisors_of(order_n // gd):
            if gcd(pow(r, ell * kd, n) - 1, n) == d:
                total += d * euler_phi(order_n // (ell * gd))
    return exact_div(total, kappa(n, r, t))


def c_total(n: int, r: int, t: int) -> CycleData:
    """Cycle number of ``a_{n,r,t}`` on D_2n minus the identity, by block.

    For square-free ``n > 1`` the reflection part uses the double divisor sum
    at the class representative ``gcd(t, n)``; otherwise the general
    fixed-point average at ``t`` itself.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    _check_unit(n, r)
    u_parts = {d: c_u_part(n, d, r) for d in divisors_of(n)[1:]}
    if n > 1 and is_squarefree(n):
        c_v = c_v_squarefree(n, r, gcd(t, n))
    else:
        c_v = c_v_general(n, r, t)
    return CycleData(n, u_parts, c_v)
