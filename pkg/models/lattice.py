"""
Character lattice of a finite field

The characters of F_{q^n}^x are labeled by exponents k in Z/M, M = q^n - 1,
relative to a fixed generator. Frobenius acts by k -> q*k. Labels are a
stable convention: changing the generator multiplies every label by a unit
mod M and leaves orbits, sizes and regularity alone.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import List, Optional, Tuple

from sympy import factorint, isprime, multiplicity, n_order

from models.errors import ParameterError, ResourceBoundError
from models.settings import sweep_bound

logger = logging.getLogger(__name__)

# Labels are plain residues mod M; the field they live in travels alongside.
CharExp = int


class OrbitFilter(Enum):
    ALL = "all"
    REGULAR = "regular"
    NONREGULAR = "nonregular"


def check_sweep(what: str, size: int, bound: Optional[int] = None) -> None:
    limit = sweep_bound(bound)
    if size > limit:
        raise ResourceBoundError(what, size, limit)


def check_prime(ell: int, p: int) -> None:
    if not isprime(ell):
        raise ParameterError(f"ell={ell} is not prime")
    if ell == p:
        raise ParameterError(f"ell={ell} equals the residue characteristic; ell-decomposition needs ell != p")


@dataclass(frozen=True)
class FieldSpec:
    """F_{q^n} seen as degree n over F_q, with character modulus M = q^n - 1"""

    p: int
    q: int
    n: int

    def __post_init__(self):
        if not isprime(self.p):
            raise ParameterError(f"p={self.p} is not prime")
        if self.q < 2 or set(factorint(self.q)) != {self.p}:
            raise ParameterError(f"q={self.q} is not a power of p={self.p}")
        if self.n < 1:
            raise ParameterError(f"n={self.n} must be a positive integer")

    @classmethod
    def over(cls, q: int, n: int) -> "FieldSpec":
        factors = factorint(q) if q >= 2 else {}
        if len(factors) != 1:
            raise ParameterError(f"q={q} is not a prime power")
        (p,) = factors
        return cls(p, q, n)

    @property
    def M(self) -> int:
        return self.q ** self.n - 1

    def __str__(self):
        return f"F_{self.q}^{self.n} (M={self.M})"

    def residue(self, k: int) -> CharExp:
        return k % self.M

    def check_divisor(self, d: int) -> None:
        if d < 1 or self.n % d:
            raise ParameterError(f"d={d} does not divide n={self.n}")

    def subfield(self, d: int) -> "FieldSpec":
        self.check_divisor(d)
        return FieldSpec(self.p, self.q, d)

    def inflation_factor(self, d: int) -> int:
        self.check_divisor(d)
        return self.M // (self.q ** d - 1)

    # Frobenius and orbits

    def frobenius_act(self, k: CharExp, i: int = 1) -> CharExp:
        """k * q^i mod M; negative i uses the inverse of q mod M"""
        return (k * pow(self.q, i, self.M)) % self.M if self.M > 1 else 0

    def order(self, k: CharExp) -> int:
        return self.M // gcd(self.M, self.residue(k))

    def stabilizer_degree(self, k: CharExp) -> int:
        """Smallest d | n with q^d * k = k mod M; equals the orbit size"""
        order = self.order(k)
        if order == 1:
            return 1
        return int(n_order(self.q, order))

    def is_regular(self, k: CharExp) -> bool:
        return self.stabilizer_degree(k) == self.n

    def orbit_of(self, k: CharExp) -> "CharOrbit":
        k = self.residue(k)
        members = {k}
        current = k
        for _ in range(self.n - 1):
            current = (current * self.q) % self.M if self.M > 1 else 0
            members.add(current)
        return CharOrbit(self, tuple(sorted(members)))

    # ell-decomposition

    def ell_decompose(self, k: CharExp, ell: int) -> Tuple[CharExp, CharExp]:
        """Split k into its ell-regular and ell-primary parts (k_reg + k_prim = k)"""
        check_prime(ell, self.p)
        k = self.residue(k)
        ell_part = ell ** multiplicity(ell, self.M)
        rest = self.M // ell_part
        # idempotent: 1 mod rest, 0 mod ell_part
        idempotent = (ell_part * pow(ell_part, -1, rest)) % self.M if self.M > 1 else 0
        k_reg = (k * idempotent) % self.M if self.M > 1 else 0
        k_prim = (k - k_reg) % self.M if self.M > 1 else 0
        return k_reg, k_prim

    def ell_regular_part(self, k: CharExp, ell: int) -> CharExp:
        return self.ell_decompose(k, ell)[0]

    def is_ell_regular(self, k: CharExp, ell: int) -> bool:
        return self.order(k) % ell != 0

    # Subfields: norm inflation, descent, restriction, twists

    def norm_inflate(self, d: int, j: int) -> CharExp:
        """Pull back the character j of F_{q^d}^x along the norm"""
        factor = self.inflation_factor(d)
        return ((j % (self.q ** d - 1)) * factor) % self.M if self.M > 1 else 0

    def is_norm_inflated(self, k: CharExp, d: int) -> bool:
        return self.residue(k) % self.inflation_factor(d) == 0

    def regular_descent(self, k: CharExp) -> Tuple[int, int]:
        """(d, j) with j regular over F_{q^d} and norm_inflate(d, j) = k"""
        k = self.residue(k)
        d = self.stabilizer_degree(k)
        return d, k // self.inflation_factor(d)

    def restrict(self, k: CharExp, d: int) -> int:
        self.check_divisor(d)
        return self.residue(k) % (self.q ** d - 1)

    def twist_by_subfield_char(self, k: CharExp, d: int, s: int) -> CharExp:
        return (self.residue(k) + self.norm_inflate(d, s)) % self.M if self.M > 1 else 0

    # Sweeps

    def enumerate_orbits(self, which: OrbitFilter = OrbitFilter.ALL,
                         bound: Optional[int] = None) -> List["CharOrbit"]:
        """Partition Z/M into Frobenius orbits, sorted by canonical member"""
        check_sweep(f"character group of {self}", self.M, bound)
        which = OrbitFilter(which)
        seen = bytearray(self.M)
        orbits = []
        for k in range(self.M):
            if seen[k]:
                continue
            orbit = self.orbit_of(k)
            for member in orbit.members:
                seen[member] = 1
            if which is OrbitFilter.ALL or (orbit.is_regular == (which is OrbitFilter.REGULAR)):
                orbits.append(orbit)
        logger.debug(f"{self}: {len(orbits)} orbits ({which.value})")
        return orbits


@dataclass(frozen=True)
class CharOrbit:
    """A Galois orbit of characters, members ascending"""

    field: FieldSpec
    members: Tuple[int, ...]

    def __post_init__(self):
        if not self.members:
            raise ParameterError("an orbit has at least one member")
        modulus = max(self.field.M, 1)
        member_set = set(self.members)
        if list(self.members) != sorted(member_set) or not all(0 <= m < modulus for m in self.members):
            raise ParameterError(f"orbit members {self.members} must be distinct ascending residues mod {modulus}")
        first = self.members[0]
        cycle, current = 1, self.field.frobenius_act(first)
        while current != first:
            cycle, current = cycle + 1, self.field.frobenius_act(current)
        if cycle != len(self.members) or any(self.field.frobenius_act(m) not in member_set for m in self.members):
            raise ParameterError(f"{self.members} is not a single Frobenius orbit over {self.field}")

    @property
    def canonical(self) -> CharExp:
        return self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_regular(self) -> bool:
        return self.size == self.field.n

    def __contains__(self, k: int) -> bool:
        return self.field.residue(k) in self.members

    def __str__(self):
        return "{" + ",".join(str(m) for m in self.members) + "}"
