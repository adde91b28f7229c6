"""
Simple inertial classes and types as triples (Theta_F, Theta_E, [chi])

An endo-class Theta_F is opaque: only its numeric invariants (p, q, delta,
e, f, r) are kept. A lift Theta_E is a point of a Z/f torsor, the generator
acting on character orbits by k -> q*k. The orbit [chi] lives in the
character group of the residue field of degree n/delta over F_{q^f}.

The GL side and the Galois side carry identical data; rec is the identity
on triples once the canonical beta-extension is used on the GL side.
"""
import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import List

from sympy import isprime

from models.errors import ParameterError
from models.lattice import CharOrbit, FieldSpec, check_prime

logger = logging.getLogger(__name__)


class Side(Enum):
    GL = "GL"
    GALOIS = "Galois"


@dataclass(frozen=True)
class EndoClassDescriptor:
    """Numeric shadow of an endo-class: degree delta = e*f, wild degree p^r"""

    p: int
    q: int
    delta: int
    e: int
    f: int
    r: int = 0

    def __post_init__(self):
        if not isprime(self.p):
            raise ParameterError(f"p={self.p} is not prime")
        # reuses the prime power check of the residue field
        FieldSpec(self.p, self.q, 1)
        if min(self.delta, self.e, self.f) < 1 or self.r < 0:
            raise ParameterError("delta, e, f must be positive and r non-negative")
        if self.e * self.f != self.delta:
            raise ParameterError(f"e*f = {self.e * self.f} differs from delta = {self.delta}")
        if self.delta % self.wild_degree:
            raise ParameterError(f"p^r = {self.wild_degree} does not divide delta = {self.delta}")

    @property
    def wild_degree(self) -> int:
        """dim alpha = p^r"""
        return self.p ** self.r

    @property
    def tame_degree(self) -> int:
        return self.delta // self.wild_degree

    @property
    def residue_q(self) -> int:
        return self.q ** self.f

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "delta": self.delta, "e": self.e, "f": self.f, "r": self.r}


@dataclass(frozen=True)
class LiftIndex:
    gamma: int
    f: int

    def __post_init__(self):
        if self.f < 1 or not 0 <= self.gamma < self.f:
            raise ParameterError(f"lift {self.gamma} is not a residue mod f={self.f}")

    def shifted(self, shift: int) -> "LiftIndex":
        return LiftIndex((self.gamma + shift) % self.f, self.f)


def residue_context(endo: EndoClassDescriptor, n: int) -> FieldSpec:
    """Degree n/delta over F_{q^f}: the field whose characters X(Theta_F) label the classes"""
    if n < 1 or n % endo.delta:
        raise ParameterError(f"delta={endo.delta} does not divide n={n}")
    return FieldSpec(endo.p, endo.residue_q, n // endo.delta)


@dataclass(frozen=True)
class SimpleInertialTriple:
    n: int
    endo: EndoClassDescriptor
    lift: LiftIndex
    orbit: CharOrbit
    side: Side = Side.GL
    char: int = 0

    def __post_init__(self):
        context = residue_context(self.endo, self.n)
        if self.orbit.field != context:
            raise ParameterError(f"orbit lives over {self.orbit.field}, expected {context}")
        if self.lift.f != self.endo.f:
            raise ParameterError(f"lift is a residue mod {self.lift.f}, expected mod f={self.endo.f}")
        if self.char:
            check_prime(self.char, self.endo.p)
            if not context.is_ell_regular(self.orbit.canonical, self.char):
                raise ParameterError(f"orbit {self.orbit} is not {self.char}-regular")

    @classmethod
    def build(cls, n: int, endo: EndoClassDescriptor, lift: int, k: int,
              side: Side = Side.GL, char: int = 0) -> "SimpleInertialTriple":
        context = residue_context(endo, n)
        return cls(n, endo, LiftIndex(lift % endo.f, endo.f), context.orbit_of(k), side, char)

    @property
    def context(self) -> FieldSpec:
        return self.orbit.field

    def with_orbit(self, k: int) -> "SimpleInertialTriple":
        return replace(self, orbit=self.context.orbit_of(k))


# Level zero maps

def level_zero_twist(endo: EndoClassDescriptor, orbit: CharOrbit, inverse: bool = False) -> CharOrbit:
    """Lambda = (Lambda^+)^(p^-r): k -> k * p^-r; inverse=True applies k -> k * p^r"""
    field = orbit.field
    if field.M == 1:
        return orbit
    exponent = endo.r if inverse else -endo.r
    return field.orbit_of(orbit.canonical * pow(endo.p, exponent, field.M))


def level_zero_twist_triple(t: SimpleInertialTriple, inverse: bool = False) -> SimpleInertialTriple:
    return replace(t, orbit=level_zero_twist(t.endo, t.orbit, inverse))


def change_lift(t: SimpleInertialTriple, shift: int) -> SimpleInertialTriple:
    """Same class, presented with the lift gamma + shift"""
    field = t.context
    if field.M == 1:
        moved = t.orbit.canonical
    else:
        moved = t.orbit.canonical * pow(t.endo.q, shift, field.M)
    return replace(t, lift=t.lift.shifted(shift), orbit=field.orbit_of(moved))


def equivalent_presentations(t: SimpleInertialTriple) -> List[SimpleInertialTriple]:
    return [change_lift(t, s) for s in range(t.endo.f)]


def canonical_triple(t: SimpleInertialTriple) -> SimpleInertialTriple:
    return change_lift(t, -t.lift.gamma)


def triples_equal(t1: SimpleInertialTriple, t2: SimpleInertialTriple) -> bool:
    if t1.side is not t2.side:
        raise ParameterError(f"cannot compare a {t1.side.value} triple with a {t2.side.value} triple")
    if (t1.n, t1.endo, t1.char) != (t2.n, t2.endo, t2.char):
        return False
    return canonical_triple(t1).orbit == canonical_triple(t2).orbit


def parametric_degree(t: SimpleInertialTriple) -> int:
    return t.orbit.size


def multiplicity(t: SimpleInertialTriple) -> int:
    return t.context.n // t.orbit.size


def inflate_simple(t0: SimpleInertialTriple, m: int) -> SimpleInertialTriple:
    """Lambda^+(sigma^(+m)) = N^*(Lambda^+ sigma)"""
    if m < 1:
        raise ParameterError(f"multiplicity m={m} must be positive")
    if not t0.orbit.is_regular:
        raise ParameterError(f"orbit {t0.orbit} is not regular; inflate_simple needs a supercuspidal class")
    n = t0.n * m
    context = residue_context(t0.endo, n)
    inflated = context.norm_inflate(t0.context.n, t0.orbit.canonical)
    return replace(t0, n=n, orbit=context.orbit_of(inflated))


# beta-extensions

@dataclass(frozen=True)
class BetaExtensionLabel:
    """A beta-extension as a twist of the p-primary one by a character of F_{q^f}^x"""

    endo: EndoClassDescriptor
    twist: int
    eps1_flag: bool = False

    def __post_init__(self):
        if not 0 <= self.twist < self.endo.residue_q - 1:
            raise ParameterError(f"twist {self.twist} is not a residue mod {self.endo.residue_q - 1}")

    def to_dict(self) -> dict:
        return dict(self.endo.to_dict(), twist=self.twist, eps1=self.eps1_flag)


def beta_twist_level_zero(orbit: CharOrbit, s: int) -> CharOrbit:
    """Replacing kappa by (chi_s)kappa shifts Lambda-values by chi_s^-1"""
    field = orbit.field
    return field.orbit_of(orbit.canonical - field.norm_inflate(1, s))


def beta_twist_triple(t: SimpleInertialTriple, s: int) -> SimpleInertialTriple:
    return replace(t, orbit=beta_twist_level_zero(t.orbit, s))


def _quadratic_label(endo: EndoClassDescriptor) -> int:
    return (endo.residue_q - 1) // 2


def epsilon_gal(endo: EndoClassDescriptor) -> int:
    """Label of the quadratic character, nontrivial iff p != 2 and the tame degree is even"""
    if endo.p != 2 and endo.tame_degree % 2 == 0:
        return _quadratic_label(endo)
    return 0


def canonical_beta_label(endo: EndoClassDescriptor, eps1_flag: bool = False) -> BetaExtensionLabel:
    """kappa_can = eps_Gal * eps1_theta * kappa_(p-primary)"""
    modulus = endo.residue_q - 1
    twist = epsilon_gal(endo)
    if eps1_flag:
        if endo.residue_q % 2 == 0:
            raise ParameterError(f"F_{endo.residue_q}^x has odd order; no quadratic character for eps1")
        twist += _quadratic_label(endo)
    return BetaExtensionLabel(endo, twist % modulus, eps1_flag)


# Langlands side and reduction

def rec_triple(t: SimpleInertialTriple) -> SimpleInertialTriple:
    if t.side is not Side.GL:
        raise ParameterError("rec_triple takes a GL-side triple")
    return replace(t, side=Side.GALOIS)


def rec_inverse(t: SimpleInertialTriple) -> SimpleInertialTriple:
    if t.side is not Side.GALOIS:
        raise ParameterError("rec_inverse takes a Galois-side triple")
    return replace(t, side=Side.GL)


def reduce_triple_mod_ell(t: SimpleInertialTriple, ell: int) -> SimpleInertialTriple:
    check_prime(ell, t.endo.p)
    if t.char not in (0, ell):
        raise ParameterError(f"cannot reduce a characteristic {t.char} triple mod {ell}")
    regular_part = t.context.ell_regular_part(t.orbit.canonical, ell)
    return replace(t, orbit=t.context.orbit_of(regular_part), char=ell)
