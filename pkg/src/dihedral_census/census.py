"""Burnside counts of CI-classes of Cayley digraphs on D_2n."""
import enum
from dataclasses import dataclass
from math import gcd

from . import cycles, d6p, oracle
from .arith import divisors_of, euler_phi, exact_div, is_prime, is_squarefree
from .dihedral import aut_group_order, enumerate_aut
from .errors import DomainError, HypothesisViolated, InvariantViolation


class DciTag(enum.Enum):
    KNOWN_DCI = "known_dci"
    KNOWN_NOT_DCI = "known_not_dci"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class DciStatus:
    tag: DciTag
    citation: str


@dataclass(frozen=True)
class CensusResult:
    n: int
    aut_order: int
    burnside_sum: int
    orbit_count: int
    dci: DciStatus
    method: str

    def __post_init__(self):
        if self.orbit_count * self.aut_order != self.burnside_sum:
            raise InvariantViolation(
                f"n={self.n}: {self.orbit_count} * {self.aut_order} != {self.burnside_sum}"
            )

    @property
    def p(self) -> int | None:
        """The prime ``p`` when the row is a D_6p count, else ``None``."""
        if self.n % 3 == 0 and self.n > 9 and is_prime(self.n // 3):
            return self.n // 3
        return None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "aut_order": self.aut_order,
            "burnside_sum": str(self.burnside_sum),
            "orbit_count": str(self.orbit_count),
            "dci": self.dci.tag.value,
            "method": self.method,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CensusResult":
        n = data["n"]
        status = dci_status(n)
        if status.tag.value != data["dci"]:
            raise DomainError(f"dci tag {data['dci']!r} disagrees with n={n}")
        return cls(
            n=n,
            aut_order=data["aut_order"],
            burnside_sum=int(data["burnside_sum"]),
            orbit_count=int(data["orbit_count"]),
            dci=status,
            method=data["method"],
        )


def dci_status(n: int) -> DciStatus:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if is_prime(n):
        return DciStatus(DciTag.KNOWN_DCI, "D_2p is a DCI-group for p prime (Babai 1977)")
    if n % 3 == 0 and n // 3 > 3 and is_prime(n // 3):
        return DciStatus(DciTag.KNOWN_DCI, "D_6p is a DCI-group iff p >= 5 (Dobson-Muzychuk-Spiga 2015)")
    if n > 2 and (n % 2 == 0 or not is_squarefree(n)):
        return DciStatus(DciTag.KNOWN_NOT_DCI, "a DCI dihedral D_2n with n > 2 has n odd and square-free")
    return DciStatus(DciTag.UNKNOWN, "no classification result on record")


def burnside_count(n: int) -> CensusResult:
    """Average ``2^c`` over every automorphism, one cycle computation each."""
    if n < 3:
        raise DomainError(f"census needs n >= 3, got {n}")
    total = sum(1 << cycles.c_total(n, a.r, a.t).total for a in enumerate_aut(n))
    order = aut_group_order(n)
    return CensusResult(n, order, total, exact_div(total, order), dci_status(n), "burnside")


def _check_hypothesis(n):
    if n <= 2 or n % 2 == 0 or not is_squarefree(n):
        raise HypothesisViolated(f"n={n}: the census theorem needs n > 2 odd and square-free")


def dci_census(n: int) -> CensusResult:
    """Divisor-weighted form: each class ``gcd(t', n) = t`` has ``phi(n/t)`` members.

    The divisor ``t = n`` stands for ``t' = 0``.
    """
    _check_hypothesis(n)
    units = [r for r in range(1, n) if gcd(r, n) == 1]
    c_u = {r: cycles.c_u_total(n, r) for r in units}
    total = 0
    for t in divisors_of(n):
        weight = euler_phi(n // t)
        total += weight * sum(1 << (c_u[r] + cycles.c_v_squarefree(n, r, t % n)) for r in units)
    order = aut_group_order(n)
    return CensusResult(n, order, total, exact_div(total, order), dci_status(n), "theorem")


def d6p_census(n: int) -> CensusResult:
    if n % 3:
        raise DomainError(f"n={n} is not of the form 3p")
    count = d6p.d6p_count(n // 3)
    order = aut_group_order(n)
    return CensusResult(n, order, count * order, count, dci_status(n), "d6p")


def oracle_census(n: int, max_bits: int | None = None) -> CensusResult:
    """Direct orbit enumeration, with the permutation-based Burnside sum as its witness."""
    count = oracle.powerset_orbit_count(n, max_bits=max_bits)
    return CensusResult(
        n, aut_group_order(n), oracle.oracle_burnside_sum(n), count, dci_status(n), "oracle"
    )


METHODS = {
    "theorem": dci_census,
    "burnside": burnside_count,
    "d6p": d6p_census,
    "oracle": oracle_census,
}


@dataclass(frozen=True)
class TableRow:
    n: int
    method: str
    result: CensusResult | None = None
    error: str | None = None


def census_table(n_values, method: str = "theorem") -> list[TableRow]:
    """One row per ``n``; a domain error lands in its row instead of aborting."""
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}")
    rows = []
    for n in n_values:
        try:
            rows.append(TableRow(n, method, result=METHODS[method](n)))
        except DomainError as exc:
            rows.append(TableRow(n, method, error=f"{type(exc).__name__}: {exc}"))
    return rows
