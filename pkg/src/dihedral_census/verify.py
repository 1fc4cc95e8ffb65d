"""Invariant suite behind ``dihedral-census verify``.

Every check compares two independent routes (closed form against brute force,
or two closed forms against each other) over a range scaled by ``n_max``.
Functions are looked up through their modules at call time so a patched
formula is what gets checked.
"""
import random
import time
from dataclasses import dataclass, field
from math import gcd

from . import arith, census, cycles, d6p, dihedral, oracle
from .errors import DomainError, InvariantViolation


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures[:5],
            "seconds": round(self.seconds, 3),
        }


class _Recorder:
    def __init__(self, result):
        self.result = result

    def expect(self, ok, label):
        self.result.cases += 1
        if not ok:
            self.result.failures.append(label)


def _units(n):
    return [r for r in range(n) if gcd(r, n) == 1]


def _odd_squarefree(lo, hi):
    return [n for n in range(lo, hi + 1) if n % 2 and arith.is_squarefree(n)]


def check_phi(rec, n_max):
    for n in range(1, n_max + 1):
        brute = sum(1 for i in range(1, n + 1) if gcd(i, n) == 1)
        rec.expect(arith.euler_phi(n) == brute, f"phi({n})")


def check_order_multiplicativity(rec, n_max):
    for n in range(2, n_max + 1):
        for d in arith.divisors_of(n):
            m = n // d
            if gcd(d, m) != 1:
                continue
            for r in _units(n):
                rec.expect(arith.order_multiplicativity_check(n, d, m, r), f"({n},{d},{m},{r})")


def check_geom_sum(rec, n_max):
    for n in range(2, n_max + 1):
        for r in _units(n):
            k = arith.mult_order(r, n)
            s = arith.geom_sum_mod(r, k, n)
            rec.expect(s * (r - 1) % n == 0, f"S_|r|(r)(r-1) n={n} r={r}")
            for d in arith.divisors_of(n):
                kd = arith.mult_order(r, d)
                for ell in range(4):
                    for kk in range(4):
                        lhs = arith.geom_sum_mod(r, ell * kk * kd, n) % d
                        rhs = ell * arith.geom_sum_mod(r, kk * kd, n) % d
                        rec.expect(lhs == rhs, f"S reduction n={n} d={d} r={r} l={ell} k={kk}")


def check_homomorphism(rec, n_max):
    for n in range(2, min(n_max, 12) + 1):
        auts = dihedral.enumerate_aut(n)
        perms = {a: dihedral.to_permutation(a).image for a in auts}
        for a in auts:
            pa = perms[a]
            for b in auts:
                pb = perms[b]
                ab = dihedral.to_permutation(dihedral.compose(a, b)).image
                rec.expect(ab == tuple(pb[k] for k in pa), f"{a} then {b}")


def check_power(rec, n_max):
    for n in range(2, min(n_max, 15) + 1):
        for a in dihedral.enumerate_aut(n):
            b = dihedral.Aut.identity(n)
            for s in range(2 * dihedral.aut_group_order(n) + 1):
                rec.expect(dihedral.power(a, s) == b, f"{a}^{s}")
                b = dihedral.compose(b, a)


def check_order(rec, n_max):
    for n in range(2, n_max + 1):
        for a in dihedral.enumerate_aut(n):
            k = dihedral.aut_order(a)
            ok = (
                k == oracle.least_power_to_identity(a)
                and k == oracle.perm_order(dihedral.to_permutation(a))
                and a.t * arith.geom_sum_mod(a.r, k, n) % n == 0
                and (gcd(a.r - 1, n) != 1 or k == arith.mult_order(a.r, n))
            )
            rec.expect(ok, f"order of {a}")


def check_kappa_identities(rec, n_max):
    for n in range(2, n_max + 1):
        units = _units(n)
        for r in units:
            order_n = arith.mult_order(r, n)
            by_class = {}
            for t in range(n):
                k = dihedral.kappa(n, r, t)
                g = gcd(t, n)
                rec.expect(by_class.setdefault(g, k) == k, f"kappa t-class n={n} r={r} t={t}")
                for d in arith.divisors_of(n):
                    m = n // d
                    if gcd(d, m) != 1:
                        continue
                    kd, km = dihedral.kappa(d, r, t), dihedral.kappa(m, r, t)
                    expected = order_n * kd * km // (gcd(kd, order_n) * gcd(km, order_n))
                    rec.expect(k == expected and k % kd == 0, f"kappa split n={n} d={d} r={r} t={t}")


def check_conjugation(rec, n_max, samples=100, seed=0):
    rng = random.Random(seed)
    for n in range(2, n_max + 1):
        units = _units(n)
        for _ in range(samples):
            r, x = rng.choice(units), rng.choice(units)
            t, y = rng.randrange(n), rng.randrange(n)
            rec.expect(dihedral.conjugation_invariance_check(n, r, t, x, y), f"({n},{r},{t},{x},{y})")


def check_cycle_oracle(rec, n_max):
    for n in range(2, n_max + 1):
        for a in dihedral.enumerate_aut(n):
            data = cycles.c_total(n, a.r, a.t)
            u_parts, c_v = oracle.cycle_data_from_permutation(a)
            rec.expect(
                data.total == oracle.perm_cycle_count(dihedral.to_permutation(a))
                and data.u_parts == u_parts
                and data.c_v == c_v,
                f"cycles of {a}",
            )


def check_fixpoint_route(rec, n_max):
    for n in range(2, min(n_max, 21) + 1):
        for a in dihedral.enumerate_aut(n):
            rec.expect(
                cycles.c_total(n, a.r, a.t).total == oracle.cycle_count_via_fixpoints(a),
                f"fixpoint average of {a}",
            )


def check_c_v_forms(rec, n_max):
    for n in range(2, n_max + 1):
        squarefree = arith.is_squarefree(n)
        for r in _units(n):
            by_class = {}
            for t in range(n):
                general = cycles.c_v_general(n, r, t)
                g = gcd(t, n)
                rec.expect(by_class.setdefault(g, general) == general, f"c_v t-class n={n} r={r} t={t}")
                if squarefree:
                    rec.expect(cycles.c_v_squarefree(n, r, t) == general, f"c_v forms n={n} r={r} t={t}")


def check_divisor_weights(rec, n_max):
    for n in range(1, n_max + 1):
        for t in arith.divisors_of(n):
            size = sum(1 for tp in range(n) if gcd(tp, n) == t)
            rec.expect(size == arith.euler_phi(n // t), f"class size n={n} t={t}")


def check_divisibility(rec, n_max):
    for n in range(3, n_max + 1):
        try:
            result = census.burnside_count(n)
        except InvariantViolation as exc:
            rec.expect(False, f"n={n}: {exc}")
            continue
        rec.expect(result.burnside_sum % result.aut_order == 0, f"n={n}")


def check_census_agreement(rec, n_max):
    for n in _odd_squarefree(3, n_max):
        rec.expect(
            census.dci_census(n).orbit_count == census.burnside_count(n).orbit_count, f"n={n}"
        )


def _d6p_primes(n_max):
    return [p for p in range(5, max(n_max, 15) // 3 + 1) if arith.is_prime(p)]


def check_d6p(rec, n_max):
    for p in _d6p_primes(n_max):
        n = 3 * p
        for r in _units(n):
            rec.expect(d6p.c_u3p(p, r) == cycles.c_u_total(n, r), f"c_U p={p} r={r}")
            for t in (1, 3, p, n):
                s_total = 0
                for d in (1, 3, p, n):
                    lam = d6p.lambda_set(p, d, r, t)
                    rec.expect(lam == d6p.lambda_set_direct(p, d, r, t), f"Lambda p={p} d={d} r={r} t={t}")
                    s = d6p.s_sum(p, d, r, t)
                    rec.expect(s == d6p.s_sum_direct(p, d, r, t), f"S p={p} d={d} r={r} t={t}")
                    s_total += s
                k = dihedral.kappa(n, r, t)
                c_v = cycles.c_v_general(n, r, t)
                rec.expect(d6p.kappa_3p(p, r, t) == k, f"kappa_3p p={p} r={r} t={t}")
                rec.expect(d6p.c_v3p(p, r, t) == c_v, f"c_V p={p} r={r} t={t}")
                rec.expect(s_total == k * c_v, f"S total p={p} r={r} t={t}")
        count = d6p.d6p_count(p)
        rec.expect(count == census.dci_census(n).orbit_count, f"d6p_count({p})")


def check_powerset(rec, n_max):
    for n in range(3, min(n_max, 7) + 1):
        rec.expect(
            oracle.powerset_orbit_count(n) == census.burnside_count(n).orbit_count, f"n={n}"
        )


def check_orbit_stabilizer(rec, n_max, samples=100, seed=0):
    n = 5
    action = oracle.SubsetAction(n)
    rng = random.Random(seed)
    for _ in range(samples):
        mask = rng.randrange(1 << action.width)
        size = len(action.orbit(mask)) * action.stabilizer_order(mask)
        rec.expect(size == dihedral.aut_group_order(n), f"mask={mask}")


CHECKS = [
    ("euler_phi_bruteforce", check_phi),
    ("order_multiplicativity", check_order_multiplicativity),
    ("geometric_sum_identities", check_geom_sum),
    ("permutation_homomorphism", check_homomorphism),
    ("power_closed_form", check_power),
    ("automorphism_order", check_order),
    ("kappa_multiplicativity_and_t_class", check_kappa_identities),
    ("kappa_conjugation_invariance", check_conjugation),
    ("cycle_number_vs_permutation", check_cycle_oracle),
    ("cycle_number_vs_fixpoint_average", check_fixpoint_route),
    ("reflection_cycle_forms_and_t_class", check_c_v_forms),
    ("divisor_class_weights", check_divisor_weights),
    ("burnside_divisibility", check_divisibility),
    ("theorem_vs_burnside", check_census_agreement),
    ("d6p_closed_forms", check_d6p),
    ("powerset_orbits_vs_burnside", check_powerset),
    ("orbit_stabilizer", check_orbit_stabilizer),
]


def run_checks(n_max: int, only=None) -> list[CheckResult]:
    if n_max < 3:
        raise DomainError(f"n_max must be at least 3, got {n_max}")
    results = []
    for name, check in CHECKS:
        if only is not None and name not in only:
            continue
        result = CheckResult(name)
        start = time.perf_counter()
        try:
            check(_Recorder(result), n_max)
        except (InvariantViolation, DomainError) as exc:
            result.failures.append(f"{type(exc).__name__}: {exc}")
        result.seconds = time.perf_counter() - start
        results.append(result)
    return results
