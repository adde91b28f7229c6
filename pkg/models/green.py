"""
Cuspidal representations of GL_n(F_q) through their character orbits

Green's parametrization attaches a supercuspidal representation over a
characteristic zero field to every orbit of F_q-regular characters of
F_{q^n}^x. James's version mod ell attaches a cuspidal representation to
every orbit of ell-regular characters that admit a regular extension.
Representations are never built: a token is the orbit label plus the
coefficient characteristic.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from sympy import divisors, multiplicity

from models.cyclotomic import CyclotomicValue
from models.errors import ParameterError
from models.lattice import CharOrbit, FieldSpec, OrbitFilter, check_prime, check_sweep

logger = logging.getLogger(__name__)


def has_regular_extension(field: FieldSpec, orbit: CharOrbit, ell: int,
                          bound: Optional[int] = None) -> bool:
    """Does some regular character have ell-regular part in the orbit?

    Searches the ell-primary coset of the canonical member; regularity is
    Galois invariant, so one member of the orbit is enough.
    """
    check_prime(ell, field.p)
    lam = orbit.canonical
    if not field.is_ell_regular(lam, ell):
        raise ParameterError(f"orbit {orbit} is not {ell}-regular")

    ell_part = ell ** multiplicity(ell, field.M)
    check_sweep(f"{ell}-primary coset in {field}", ell_part, bound)
    step = field.M // ell_part
    for t in range(ell_part):
        if field.is_regular(lam + t * step):
            return True
    return False


@dataclass(frozen=True)
class CuspidalToken:
    """sigma[chi] (char 0) or sigma_ell[chi] (char ell) for GL_n(F_q), n = field.n"""

    field: FieldSpec
    orbit: CharOrbit
    char: int = 0

    def __post_init__(self):
        if self.orbit.field != self.field:
            raise ParameterError(f"orbit lives over {self.orbit.field}, token over {self.field}")
        if self.char == 0:
            if not self.orbit.is_regular:
                raise ParameterError(f"orbit {self.orbit} is not regular; no characteristic 0 cuspidal is attached")
            return
        check_prime(self.char, self.field.p)
        if not has_regular_extension(self.field, self.orbit, self.char):
            raise ParameterError(f"orbit {self.orbit} has no regular extension mod {self.char}")

    @property
    def is_supercuspidal(self) -> bool:
        return self.char == 0 or self.orbit.is_regular

    def to_dict(self) -> dict:
        return {
            "q": self.field.q,
            "n": self.field.n,
            "char": self.char,
            "orbit_canonical": self.orbit.canonical,
            "members": list(self.orbit.members),
            "supercuspidal": self.is_supercuspidal,
        }


@dataclass(frozen=True)
class SupportEntry:
    degree: int
    orbit: CharOrbit
    multiplicity: int

    def to_dict(self) -> dict:
        return {
            "d": self.degree,
            "orbit_canonical": self.orbit.canonical,
            "members": list(self.orbit.members),
            "a": self.multiplicity,
        }


@dataclass(frozen=True)
class SupportMultiset:
    entries: Tuple[SupportEntry, ...]

    @property
    def total_degree(self) -> int:
        return sum(entry.degree * entry.multiplicity for entry in self.entries)

    def to_dict(self) -> dict:
        return {"entries": [entry.to_dict() for entry in self.entries], "total_degree": self.total_degree}


def green_rep(field: FieldSpec, orbit: CharOrbit) -> CuspidalToken:
    return CuspidalToken(field, orbit, 0)


def is_supercuspidal(token: CuspidalToken) -> bool:
    return token.is_supercuspidal


def primitive_elements(field: FieldSpec, bound: Optional[int] = None) -> List[int]:
    """Exponents m with g^m generating F_{q^n} over F_q"""
    check_sweep(f"multiplicative group of {field}", field.M, bound)
    factors = [field.inflation_factor(d) for d in divisors(field.n) if d < field.n]
    return [m for m in range(field.M) if all(m % factor for factor in factors)]


def is_primitive_exponent(field: FieldSpec, m: int) -> bool:
    m = field.residue(m)
    return all(m % field.inflation_factor(d) for d in divisors(field.n) if d < field.n)


def green_trace(token: CuspidalToken, m: int) -> CyclotomicValue:
    """(-1)^(n-1) * sum_i chi(F^i x) at x = g^m, exactly"""
    if token.char != 0:
        raise ParameterError("trace values are only available in characteristic 0")
    field = token.field
    if not is_primitive_exponent(field, m):
        raise ParameterError(f"g^{m} is not a primitive element of {field} over F_{field.q}")
    k = token.orbit.canonical
    exponents = [field.frobenius_act(k * m, i) for i in range(field.n)]
    sign = -1 if (field.n - 1) % 2 else 1
    return CyclotomicValue.from_exponents(field.M, exponents, sign)


def reduce_mod_ell(token: CuspidalToken, ell: int) -> CuspidalToken:
    """Reduction mod ell: keep the ell-regular part of the orbit"""
    field = token.field
    check_prime(ell, field.p)
    if token.char == ell:
        return token
    if token.char != 0:
        raise ParameterError(f"cannot reduce a characteristic {token.char} token mod {ell}")
    regular_part = field.ell_regular_part(token.orbit.canonical, ell)
    return CuspidalToken(field, field.orbit_of(regular_part), ell)


def cuspidal_support_mod_ell(token: CuspidalToken, ell: int) -> SupportMultiset:
    """Supercuspidal support of the reduction: sigma_ell[chi_reg]^(x a)"""
    if token.char not in (0, ell):
        raise ParameterError(f"token has characteristic {token.char}, not 0 or {ell}")
    field = token.field
    check_prime(ell, field.p)
    regular_part = field.ell_regular_part(token.orbit.canonical, ell)
    d, j = field.regular_descent(regular_part)
    entry = SupportEntry(d, field.subfield(d).orbit_of(j), field.n // d)
    return SupportMultiset((entry,))


def twist_token(token: CuspidalToken, s: int) -> CuspidalToken:
    """psi (x) sigma[chi] = sigma[psi chi] for the character s of F_q^x"""
    field = token.field
    twist = field.norm_inflate(1, s)
    if token.char:
        twist = field.ell_regular_part(twist, token.char)
    return CuspidalToken(field, field.orbit_of(token.orbit.canonical + twist), token.char)


def enumerate_cuspidal_tokens(field: FieldSpec, char: int = 0,
                              bound: Optional[int] = None) -> List[CuspidalToken]:
    """All cuspidal tokens of GL_n(F_q) in the given characteristic"""
    regular = field.enumerate_orbits(OrbitFilter.REGULAR, bound)
    if char == 0:
        return [CuspidalToken(field, orbit, 0) for orbit in regular]

    check_prime(char, field.p)
    # every admissible orbit is the ell-regular part of a regular one
    canonicals = sorted({field.orbit_of(field.ell_regular_part(orbit.canonical, char)).canonical
                         for orbit in regular})
    tokens = [CuspidalToken(field, field.orbit_of(k), char) for k in canonicals]
    logger.debug(f"{field} mod {char}: {len(tokens)} cuspidal tokens")
    return tokens
