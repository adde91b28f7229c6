"""
Rigidity of base-character twists on orbits

(i) every nontrivial twist moves some regular orbit, (ii) twists keep orbit
sizes, (iii) twists respect "same ell-regular part" in both directions.
Properties (ii) and (iii) are closed under composition, so beyond the work
cap the generator s = 1 is enough for them; (i) is always exhaustive.
"""
import logging
from typing import Any, Dict, List, Sequence

from models.lattice import FieldSpec, OrbitFilter, check_prime
from models.verifiers.base import BaseVerifier, Status, ells_dividing, twist_label

logger = logging.getLogger(__name__)


class XiRigidityVerifier(BaseVerifier):
    claim_id = "xi-rigidity"

    def __init__(self, point: Dict[str, Any], **kwargs):
        super().__init__(point, **kwargs)
        self.ells = list(self.point.get('ells') or [])
        for ell in self.ells:
            check_prime(ell, self.field.p)

    @classmethod
    def expand(cls, q: int, n: int, ells: Sequence[int] = (), **options) -> List[Dict[str, Any]]:
        chosen = list(ells) if ells else ells_dividing(FieldSpec.over(q, n))
        return [{"q": q, "n": n, "ells": chosen}]

    def _rigidity(self, regular) -> Dict[str, Any]:
        moved = []
        for s in range(1, self.field.q - 1):
            shift = twist_label(self.field, s)
            for orbit in regular:
                self._checkpoint()
                if orbit.canonical + shift not in orbit:
                    moved.append({"s": s, "orbit": orbit.canonical})
                    break
            else:
                return {"counterexample": {"property": "rigidity", "s": s}}
        return {"moved": moved}

    def _class_map_ok(self, orbits, classes: Dict[int, int], shift: int) -> bool:
        """The twist induces a well-defined injective map on ell-regular classes"""
        forward: Dict[int, int] = {}
        backward: Dict[int, int] = {}
        for orbit in orbits:
            self._checkpoint()
            source = classes[orbit.canonical]
            target = classes[self.field.orbit_of(orbit.canonical + shift).canonical]
            if forward.setdefault(source, target) != target or backward.setdefault(target, source) != source:
                return False
        return True

    def check(self):
        field = self.field
        orbits = field.enumerate_orbits(OrbitFilter.ALL, self.bound)
        regular = [orbit for orbit in orbits if orbit.is_regular]
        payload: Dict[str, Any] = {"ells": self.ells}

        rigidity = self._rigidity(regular)
        if "counterexample" in rigidity:
            payload.update(rigidity)
            return Status.FAIL, payload
        payload["moved"] = rigidity["moved"]

        mode = self.twist_mode(len(orbits))
        payload["twist_mode"] = mode
        class_maps = {
            ell: {orbit.canonical: field.orbit_of(field.ell_regular_part(orbit.canonical, ell)).canonical
                  for orbit in orbits}
            for ell in self.ells
        }
        for s in self.twist_range(mode):
            shift = twist_label(field, s)
            for orbit in orbits:
                self._checkpoint()
                if field.orbit_of(orbit.canonical + shift).size != orbit.size:
                    payload["counterexample"] = {"property": "orbit-size", "s": s, "orbit": orbit.canonical}
                    return Status.FAIL, payload
            for ell, classes in class_maps.items():
                if not self._class_map_ok(orbits, classes, shift):
                    payload["counterexample"] = {"property": "ell-regular-classes", "s": s, "ell": ell}
                    return Status.FAIL, payload

        return Status.PASS, payload
