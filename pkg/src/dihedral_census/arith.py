"""Number-theory kernel.

Counts are plain Python ``int`` (arbitrary precision, exact). Everything in
here is trial-division grade; the group parameters in scope stay small.
"""
from functools import lru_cache
from math import gcd, isqrt

from .errors import DomainError, InvariantViolation


def exact_div(a: int, b: int) -> int:
    """Return ``a // b``, raising :class:`InvariantViolation` unless ``b | a``."""
    q, rem = divmod(a, b)
    if rem:
        raise InvariantViolation(f"non-exact division {a} / {b}")
    return q


def _require_positive(n, name="n"):
    if n < 1:
        raise DomainError(f"{name} must be a positive integer, got {n}")


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as ``((p, e), ...)`` with ascending ``p``."""
    _require_positive(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    _require_positive(n)
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


@lru_cache(maxsize=None)
def divisors_of(n: int) -> tuple[int, ...]:
    """All positive divisors of ``n`` in ascending order."""
    _require_positive(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return tuple(small + large[::-1])


def is_squarefree(n: int) -> bool:
    _require_positive(n)
    return all(e == 1 for _, e in factorize(n))


@lru_cache(maxsize=None)
def _mult_order(r: int, n: int) -> int:
    # order divides the Carmichael-free bound phi(n); test its divisors
    for s in divisors_of(euler_phi(n)):
        if pow(r, s, n) == 1:
            return s
    raise InvariantViolation(f"no order found for {r} mod {n}")


def mult_order(r: int, n: int) -> int:
    """Multiplicative order of ``r`` modulo ``n`` (``1`` when ``n == 1``)."""
    _require_positive(n)
    if gcd(r, n) != 1:
        raise DomainError(f"{r} is not a unit modulo {n}")
    if n == 1:
        return 1
    return _mult_order(r % n, n)


def geom_sum_mod(r: int, m: int, n: int) -> int:
    """``(1 + r + ... + r^(m-1)) mod n``; the empty sum ``m == 0`` gives 0.

    Uses the doubling recurrences ``S_2k = S_k (1 + r^k)`` and
    ``S_(k+1) = 1 + r S_k``, so ``m`` may be huge.
    """
    if m < 0:
        raise DomainError(f"m must be nonnegative, got {m}")
    _require_positive(n)
    r %= n
    total, power = 0, 1  # S_k mod n and r^k mod n for the prefix k read so far
    for bit in bin(m)[2:]:
        total = total * (1 + power) % n
        power = power * power % n
        if bit == "1":
            total = (1 + r * total) % n
            power = power * r % n
    return total


def order_multiplicativity_check(n: int, d: int, m: int, r: int) -> bool:
    """Whether ``|r|_n == lcm(|r|_d, |r|_m)`` for a coprime split ``n = d*m``."""
    if n != d * m or d < 1 or m < 1:
        raise DomainError(f"{n} != {d} * {m}")
    if gcd(d, m) != 1:
        raise DomainError(f"{d} and {m} are not coprime")
    if gcd(r, n) != 1:
        raise DomainError(f"{r} is not a unit modulo {n}")
    od, om = mult_order(r, d), mult_order(r, m)
    return mult_order(r, n) == od * om // gcd(od, om)
