"""
Green traces on primitive elements separate regular orbits

Orbits are split by fingerprints of their traces, one primitive exponent
at a time, until every class is a singleton. Different fingerprints prove
different traces; classes that survive all exponents are compared exactly.
"""
import logging
from collections import defaultdict
from typing import Any, Dict, List, Sequence, Tuple

from models.cyclotomic import CyclotomicFingerprint
from models.green import green_rep, green_trace, primitive_elements
from models.lattice import CharOrbit, OrbitFilter
from models.verifiers.base import BaseVerifier, Status

logger = logging.getLogger(__name__)


class TraceSeparationVerifier(BaseVerifier):
    claim_id = "trace-separation"

    def __init__(self, point: Dict[str, Any], **kwargs):
        super().__init__(point, **kwargs)
        self.exact = bool(self.point.get('exact', False))

    @classmethod
    def expand(cls, q: int, n: int, ells: Sequence[int] = (), **options) -> List[Dict[str, Any]]:
        point = {"q": q, "n": n}
        if options.get('exact'):
            point["exact"] = True
        return [point]

    def _exact_vector(self, orbit: CharOrbit, primitives: List[int]) -> Tuple:
        token = green_rep(self.field, orbit)
        vector = []
        for m in primitives:
            self._checkpoint()
            vector.append(green_trace(token, m).coefficients)
        return tuple(vector)

    def _exact_collision(self, orbits: List[CharOrbit], primitives: List[int]):
        seen: Dict[Tuple, CharOrbit] = {}
        for orbit in orbits:
            vector = self._exact_vector(orbit, primitives)
            if vector in seen:
                return seen[vector], orbit
            seen[vector] = orbit
        return None

    def _fingerprint_classes(self, orbits: List[CharOrbit], primitives: List[int]):
        field = self.field
        fingerprint = CyclotomicFingerprint(field.M)
        sign = -1 if (field.n - 1) % 2 else 1
        classes = [orbits]
        used = []
        for m in primitives:
            if all(len(group) == 1 for group in classes):
                break
            used.append(m)
            refined = []
            for group in classes:
                if len(group) == 1:
                    refined.append(group)
                    continue
                split = defaultdict(list)
                for orbit in group:
                    self._checkpoint()
                    exponents = [field.frobenius_act(orbit.canonical * m, i) for i in range(field.n)]
                    split[fingerprint.of_exponents(exponents, sign)].append(orbit)
                refined.extend(split.values())
            classes = refined
        return fingerprint, used, [group for group in classes if len(group) > 1]

    def check(self):
        orbits = self.field.enumerate_orbits(OrbitFilter.REGULAR, self.bound)
        primitives = primitive_elements(self.field, self.bound)
        payload: Dict[str, Any] = {"regular_orbits": len(orbits), "primitive_exponents": len(primitives)}

        if self.exact:
            payload["method"] = "exact"
            collision = self._exact_collision(orbits, primitives)
        else:
            fingerprint, used, unresolved = self._fingerprint_classes(orbits, primitives)
            payload.update({
                "method": "fingerprint",
                "fingerprint_prime": fingerprint.prime,
                "fingerprint_root": fingerprint.root,
                "exponents_used": used,
                "exact_rechecks": sum(len(group) for group in unresolved),
            })
            collision = None
            for group in unresolved:
                collision = self._exact_collision(group, primitives)
                if collision:
                    break

        if collision:
            first, second = collision
            payload["counterexample"] = {"orbit_a": list(first.members), "orbit_b": list(second.members)}
            return Status.FAIL, payload
        return Status.PASS, payload
