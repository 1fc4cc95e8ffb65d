"""Deliberately naive reference computations that share no code with the package."""
from math import gcd


def phi(n):
    return sum(1 for i in range(1, n + 1) if gcd(i, n) == 1)


def order_mod(r, n):
    if n == 1:
        return 1
    s, x = 1, r % n
    while x != 1:
        x = x * r % n
        s += 1
    return s


def elements(n):
    """Non-identity elements of D_2n as ('u', i) / ('v', j) tuples, in index order."""
    return [("u", i) for i in range(1, n)] + [("v", j) for j in range(n)]


def act(n, r, t, g):
    kind, e = g
    return ("u", r * e % n) if kind == "u" else ("v", (r * e + t) % n)


def cycle_lengths(n, r, t, points=None):
    points = elements(n) if points is None else points
    seen, lengths = set(), []
    for g in points:
        if g in seen:
            continue
        length, h = 0, g
        while h not in seen:
            seen.add(h)
            h = act(n, r, t, h)
            length += 1
        lengths.append(length)
    return lengths


def automorphisms(n):
    return [(r, t) for r in range(n) if gcd(r, n) == 1 for t in range(n)]


def burnside_sum(n):
    return sum(2 ** len(cycle_lengths(n, r, t)) for r, t in automorphisms(n))


def orbit_count(n):
    """Orbits on subsets, with subsets as frozensets of element tuples."""
    pts = elements(n)
    auts = automorphisms(n)
    seen, count = set(), 0
    for mask in range(1 << len(pts)):
        s = frozenset(p for k, p in enumerate(pts) if mask >> k & 1)
        if s in seen:
            continue
        count += 1
        for r, t in auts:
            seen.add(frozenset(act(n, r, t, g) for g in s))
    return count
