"""
Exact arithmetic in the cyclotomic integers Z[zeta_M]

Values are coefficient vectors in the power basis 1, x, ..., x^(phi(M)-1),
obtained by folding exponents mod M and reducing modulo the M-th
cyclotomic polynomial. Sums of roots of unity can agree without agreeing
term by term, so equality is only ever decided on reduced vectors.
"""
import cmath
import logging
import threading
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

from sympy import cyclotomic_poly, isprime, primefactors
from sympy.polys.densearith import dup_rem
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

from models.errors import ParameterError

logger = logging.getLogger(__name__)

_POLY_CACHE: Dict[int, Tuple[int, ...]] = {}
_POLY_LOCK = threading.Lock()
_RING, _ = ring("x", ZZ)
_SPARSE_CACHE: Dict[int, object] = {}


def cyclotomic_coefficients(modulus: int) -> Tuple[int, ...]:
    """Coefficients of Phi_M, highest degree first"""
    if modulus < 1:
        raise ParameterError(f"cyclotomic modulus must be positive, got {modulus}")
    cached = _POLY_CACHE.get(modulus)
    if cached is not None:
        return cached

    coefficients = tuple(int(c) for c in cyclotomic_poly(modulus, polys=True).all_coeffs())
    with _POLY_LOCK:
        # another thread may have won the race; keep the first entry
        return _POLY_CACHE.setdefault(modulus, coefficients)


def cyclotomic_degree(modulus: int) -> int:
    return len(cyclotomic_coefficients(modulus)) - 1


def _sparse_cyclotomic(modulus: int):
    """Phi_M as a sparse ring element"""
    cached = _SPARSE_CACHE.get(modulus)
    if cached is not None:
        return cached
    element = _RING.from_list(list(cyclotomic_coefficients(modulus)))
    with _POLY_LOCK:
        return _SPARSE_CACHE.setdefault(modulus, element)


@dataclass(frozen=True)
class CyclotomicValue:
    """An element of Z[zeta_M] in reduced power-basis form, lowest degree first"""

    modulus: int
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) != cyclotomic_degree(self.modulus):
            raise ParameterError(
                f"expected {cyclotomic_degree(self.modulus)} coefficients for M={self.modulus}, "
                f"got {len(self.coefficients)}"
            )

    @classmethod
    def reduce(cls, modulus: int, coefficients: Sequence[int]) -> "CyclotomicValue":
        """Reduce an arbitrary integer polynomial (lowest degree first) modulo Phi_M"""
        folded = [0] * modulus
        for exponent, c in enumerate(coefficients):
            folded[exponent % modulus] += c

        phi = cyclotomic_coefficients(modulus)
        degree = len(phi) - 1
        if modulus > degree:
            dense = dup_strip([ZZ(c) for c in reversed(folded)])
            remainder = dup_rem(dense, [ZZ(c) for c in phi], ZZ)
            reduced = [int(c) for c in reversed(remainder)]
        else:
            reduced = folded
        reduced = reduced[:degree] + [0] * (degree - len(reduced))
        return cls(modulus, tuple(reduced))

    @classmethod
    def from_exponents(cls, modulus: int, exponents: Iterable[int], sign: int = 1) -> "CyclotomicValue":
        """sign * sum of zeta^e over the given exponents

        Only the folded exponents are divided by Phi_M, as a sparse
        polynomial, so the cost follows the number of terms rather than M.
        """
        if modulus < 1:
            raise ParameterError(f"cyclotomic modulus must be positive, got {modulus}")
        folded = Counter(e % modulus for e in exponents)
        numerator = _RING.from_dict({(e,): sign * count for e, count in folded.items()})
        reduced = [0] * cyclotomic_degree(modulus)
        for (e,), c in numerator.rem(_sparse_cyclotomic(modulus)).items():
            reduced[e] = int(c)
        return cls(modulus, tuple(reduced))

    @classmethod
    def zero(cls, modulus: int) -> "CyclotomicValue":
        return cls(modulus, (0,) * cyclotomic_degree(modulus))

    def _check_modulus(self, other: "CyclotomicValue") -> None:
        if other.modulus != self.modulus:
            raise ParameterError(f"cannot combine values of Z[zeta_{self.modulus}] and Z[zeta_{other.modulus}]")

    def __add__(self, other: "CyclotomicValue") -> "CyclotomicValue":
        self._check_modulus(other)
        return CyclotomicValue(self.modulus, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "CyclotomicValue":
        return CyclotomicValue(self.modulus, tuple(-a for a in self.coefficients))

    def __sub__(self, other: "CyclotomicValue") -> "CyclotomicValue":
        return self + (-other)

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def approximate(self) -> complex:
        """Numerical value at zeta_M = exp(2 pi i / M); for display only"""
        zeta = cmath.exp(2j * cmath.pi / self.modulus)
        return sum(c * zeta ** i for i, c in enumerate(self.coefficients) if c)

    def approximate_text(self, digits: int = 12) -> str:
        z = self.approximate()
        # + 0.0 turns -0.0 into 0.0 so identical values print identically
        real = round(z.real, digits) + 0.0
        imag = round(z.imag, digits) + 0.0
        return f"{real:.{digits}f}{imag:+.{digits}f}i"

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "coefficients": list(self.coefficients),
            "approx_decimal": self.approximate_text(),
        }

    def __str__(self):
        terms = [f"{c}*z^{i}" if i else str(c) for i, c in enumerate(self.coefficients) if c]
        return " + ".join(terms) if terms else "0"


class CyclotomicFingerprint:
    """Reduction Z[zeta_M] -> F_P, zeta_M -> omega, for a prime P = 1 mod M

    Phi_M is monic, so a difference that vanishes in Z[zeta_M] vanishes at
    every primitive M-th root of unity mod P. Different fingerprints
    therefore prove different values; equal fingerprints prove nothing.
    """

    def __init__(self, modulus: int, floor: int = 2 ** 31):
        if modulus < 1:
            raise ParameterError(f"cyclotomic modulus must be positive, got {modulus}")
        self.modulus = modulus

        t = floor // modulus + 1
        while not isprime(t * modulus + 1):
            t += 1
        self.prime = t * modulus + 1
        self.root = self._primitive_root_of_unity()
        self._powers: Optional[list] = None
        logger.debug(f"fingerprint for M={modulus}: P={self.prime}, omega={self.root}")

    def _primitive_root_of_unity(self) -> int:
        if self.modulus == 1:
            return 1
        cofactor = (self.prime - 1) // self.modulus
        factors = primefactors(self.modulus)
        h = 2
        while True:
            candidate = pow(h, cofactor, self.prime)
            if all(pow(candidate, self.modulus // r, self.prime) != 1 for r in factors):
                return candidate
            h += 1

    def power(self, exponent: int) -> int:
        if self._powers is None:
            powers = [1] * self.modulus
            for i in range(1, self.modulus):
                powers[i] = powers[i - 1] * self.root % self.prime
            self._powers = powers
        return self._powers[exponent % self.modulus]

    def of_exponents(self, exponents: Iterable[int], sign: int = 1) -> int:
        return sign * sum(self.power(e) for e in exponents) % self.prime

    def of_value(self, value: CyclotomicValue) -> int:
        if value.modulus != self.modulus:
            raise ParameterError(f"fingerprint is for M={self.modulus}, value is in Z[zeta_{value.modulus}]")
        return sum(c * self.power(i) for i, c in enumerate(value.coefficients)) % self.prime
