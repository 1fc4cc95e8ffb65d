"""Brute-force ground truth, independent of the closed forms.

Nothing here calls into ``cycles``, ``census`` or ``kappa``: cycle numbers
come from explicit permutations and orbit counts from enumerating every
subset of the non-identity elements.
"""
import os
from math import gcd, lcm

import numpy as np

from .arith import exact_div
from .dihedral import Aut, Element, Permutation, apply, compose, enumerate_aut, to_permutation
from .errors import DomainError, TooLarge

MASK_BITS_ENV = "CAYLEY_CENSUS_MAX_MASK_BITS"
DEFAULT_MAX_MASK_BITS = 25


def max_mask_bits() -> int:
    value = os.environ.get(MASK_BITS_ENV)
    if value is None:
        return DEFAULT_MAX_MASK_BITS
    try:
        return int(value)
    except ValueError:
        raise DomainError(f"{MASK_BITS_ENV} must be an integer, got {value!r}") from None


def perm_cycles(perm: Permutation) -> list[list[int]]:
    seen = [False] * perm.size
    cycles = []
    for start in range(perm.size):
        if seen[start]:
            continue
        cycle = []
        k = start
        while not seen[k]:
            seen[k] = True
            cycle.append(k)
            k = perm.image[k]
        cycles.append(cycle)
    return cycles


def perm_cycle_count(perm: Permutation) -> int:
    return len(perm_cycles(perm))


def perm_order(perm: Permutation) -> int:
    return lcm(*(len(c) for c in perm_cycles(perm)))


def cycle_data_from_permutation(a: Aut) -> tuple[dict[int, int], int]:
    """Count cycles of ``a`` per rotation-order block and on the reflections.

    Returns ``(u_parts, c_v)`` with ``u_parts`` keyed by element order.
    """
    n = a.n
    u_parts: dict[int, int] = {}
    c_v = 0
    for cycle in perm_cycles(to_permutation(a)):
        g = Element.from_index(n, cycle[0])
        if g.reflection:
            c_v += 1
        else:
            order = n // gcd(g.exponent, n)
            u_parts[order] = u_parts.get(order, 0) + 1
    return dict(sorted(u_parts.items())), c_v


def least_power_to_identity(a: Aut) -> int:
    """Smallest ``s >= 1`` with ``a^s`` the identity, by repeated composition."""
    s, b = 1, a
    while not b.is_identity:
        b = compose(b, a)
        s += 1
    return s


def cycle_count_via_fixpoints(a: Aut) -> int:
    """Average number of fixed non-identity elements over the cyclic group ``<a>``."""
    n = a.n
    points = [Element.from_index(n, k) for k in range(2 * n - 1)]
    total, order = 0, 0
    b = Aut.identity(n)
    while True:
        total += sum(1 for g in points if apply(b, g) == g)
        order += 1
        b = compose(b, a)
        if b.is_identity:
            break
    return exact_div(total, order)


class SubsetAction:
    """The automorphism group acting on bitmask subsets of D_2n minus the identity.

    Images are computed by byte-wise lookup: for each permutation and byte
    position a 256-entry table maps the byte to the OR of its scattered bits.
    """

    def __init__(self, n: int):
        if n < 2:
            raise DomainError("subset action needs n >= 2")
        self.n = n
        self.width = 2 * n - 1
        self.perms = [to_permutation(a).image for a in enumerate_aut(n)]
        self.nbytes = (self.width + 7) // 8
        self.tables = []
        for image in self.perms:
            per_byte = []
            for b in range(self.nbytes):
                table = [0] * 256
                for bit in range(8):
                    k = 8 * b + bit
                    if k < self.width:
                        hi = 1 << bit
                        target = 1 << image[k]
                        for v in range(hi, 256, 2 * hi):
                            for w in range(v, v + hi):
                                table[w] |= target
                per_byte.append(table)
            self.tables.append(per_byte)

    def image(self, index: int, mask: int) -> int:
        out = 0
        for table in self.tables[index]:
            out |= table[mask & 0xFF]
            mask >>= 8
        return out

    def orbit(self, mask: int) -> set[int]:
        return {self.image(i, mask) for i in range(len(self.perms))}

    def stabilizer_order(self, mask: int) -> int:
        return sum(1 for i in range(len(self.perms)) if self.image(i, mask) == mask)

    def image_array(self, index: int, masks: np.ndarray) -> np.ndarray:
        out = np.zeros_like(masks)
        for b, table in enumerate(self.tables[index]):
            lut = np.asarray(table, dtype=masks.dtype)
            out |= lut[(masks >> (8 * b)) & 0xFF]
        return out


def _check_width(n, limit):
    if n < 2:
        raise DomainError("powerset orbit count needs n >= 2")
    limit = max_mask_bits() if limit is None else limit
    if 2 * n - 1 > limit:
        raise TooLarge(f"2n-1 = {2 * n - 1} bits exceeds the limit of {limit}")


def powerset_orbit_count(n: int, max_bits: int | None = None, strategy: str = "visited") -> int:
    """Count automorphism orbits on all subsets of D_2n minus the identity.

    ``visited`` walks masks in ascending order, counts each unvisited mask and
    marks its whole orbit. ``minimum`` counts a mask iff no group element maps
    it to a smaller mask, vectorized over chunks of the mask space. Both give
    the same exact count.
    """
    _check_width(n, max_bits)
    action = SubsetAction(n)
    size = 1 << action.width
    if strategy == "visited":
        visited = bytearray(size)
        count = 0
        for mask in range(size):
            if visited[mask]:
                continue
            count += 1
            for m in action.orbit(mask):
                visited[m] = 1
        return count
    if strategy == "minimum":
        count = 0
        chunk = 1 << 20
        for start in range(0, size, chunk):
            masks = np.arange(start, min(start + chunk, size), dtype=np.int64)
            is_min = np.ones(masks.shape, dtype=bool)
            for i in range(len(action.perms)):
                is_min &= action.image_array(i, masks) >= masks
            count += int(is_min.sum())
        return count
    raise DomainError(f"unknown strategy {strategy!r}")


def oracle_burnside_sum(n: int) -> int:
    """``sum 2^c`` with each cycle number read off the explicit permutation."""
    return sum(1 << perm_cycle_count(to_permutation(a)) for a in enumerate_aut(n))
