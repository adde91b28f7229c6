"""
A base character fixing every cuspidal is trivial

In characteristic 0 every nontrivial character s of F_q^x must move some
regular orbit under k -> k + inflate(s). In characteristic ell only the
ell-regular s are in play, and the orbits are those of the cuspidal
tokens mod ell.
"""
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import divisors, multiplicity

from models.green import enumerate_cuspidal_tokens
from models.lattice import FieldSpec, OrbitFilter, check_prime
from models.verifiers.base import BaseVerifier, Status, ells_dividing, twist_label

logger = logging.getLogger(__name__)


class FixingCharacterVerifier(BaseVerifier):
    claim_id = "fixing-character"

    def __init__(self, point: Dict[str, Any], **kwargs):
        super().__init__(point, **kwargs)
        self.char = self.point.get('char', 0)
        if self.char:
            check_prime(self.char, self.field.p)

    @classmethod
    def expand(cls, q: int, n: int, ells: Sequence[int] = (), **options) -> List[Dict[str, Any]]:
        chars = list(ells) if ells else [0] + ells_dividing(FieldSpec.over(q, n))
        return [{"q": q, "n": n, "char": char} for char in chars]

    def _twists(self) -> List[int]:
        q = self.field.q
        if not self.char:
            return list(range(1, q - 1))
        # ell-regular s: the order (q-1)/gcd(q-1, s) is prime to ell
        base = self.field.subfield(1)
        return [s for s in range(1, q - 1) if base.is_ell_regular(s, self.char)]

    def _orbits(self):
        if not self.char:
            return self.field.enumerate_orbits(OrbitFilter.REGULAR, self.bound)
        return [token.orbit for token in enumerate_cuspidal_tokens(self.field, self.char, self.bound)]

    def _branch(self) -> Dict[str, Any]:
        """Which half of the argument applies mod ell"""
        field = self.field
        ell_part = multiplicity(self.char, field.M)
        for a in divisors(field.n):
            if a < field.n and multiplicity(self.char, field.q ** a - 1) == ell_part:
                return {"branch": "same-ell-part-divisor", "a": a}
        return {"branch": "ell-primary-regular-element"}

    def _witness(self, orbits, s: int) -> Optional[Tuple[int, int]]:
        shift = twist_label(self.field, s)
        for orbit in orbits:
            self._checkpoint()
            moved = orbit.canonical + shift
            if moved not in orbit:
                return orbit.canonical, self.field.orbit_of(moved).canonical
        return None

    def check(self):
        payload: Dict[str, Any] = {"char": self.char}
        if self.char and self.field.M > 1:
            payload.update(self._branch())

        twists = self._twists()
        if not twists:
            payload["vacuous"] = True
            return Status.PASS, payload

        orbits = self._orbits()
        witnesses = []
        for s in twists:
            found = self._witness(orbits, s)
            if found is None:
                payload["counterexample"] = {"s": s, "orbits_checked": len(orbits)}
                return Status.FAIL, payload
            witnesses.append({"s": s, "orbit": found[0], "image": found[1]})

        payload["witnesses"] = witnesses
        return Status.PASS, payload
