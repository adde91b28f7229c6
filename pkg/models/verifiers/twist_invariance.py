import logging
from typing import Any, Dict

from models.inertial import EndoClassDescriptor, beta_twist_level_zero, level_zero_twist
from models.lattice import OrbitFilter
from models.verifiers.base import BaseVerifier, Status

logger = logging.getLogger(__name__)


class TwistInvarianceVerifier(BaseVerifier):
    """Level zero twist and beta twists keep orbit sizes, hence multiplicities

    The level zero twist is taken with wild exponent r = 1, i.e. k -> k/p
    and its inverse k -> p*k.
    """

    claim_id = "twist-invariance"

    def check(self):
        field = self.field
        p = field.p
        endo = EndoClassDescriptor(p, field.q, p, p, 1, 1)
        orbits = field.enumerate_orbits(OrbitFilter.ALL, self.bound)
        payload: Dict[str, Any] = {"orbits": len(orbits)}

        for orbit in orbits:
            self._checkpoint()
            image = level_zero_twist(endo, orbit)
            if image.size != orbit.size:
                payload["counterexample"] = {"map": "level-zero", "orbit": orbit.canonical, "image": image.canonical}
                return Status.FAIL, payload
            back = level_zero_twist(endo, image, inverse=True)
            if back != orbit:
                payload["counterexample"] = {"map": "level-zero-inverse", "orbit": orbit.canonical,
                                             "image": back.canonical}
                return Status.FAIL, payload

        mode = self.twist_mode(len(orbits))
        payload["twist_mode"] = mode
        for s in self.twist_range(mode):
            for orbit in orbits:
                self._checkpoint()
                image = beta_twist_level_zero(orbit, s)
                if image.size != orbit.size:
                    payload["counterexample"] = {"map": "beta", "s": s, "orbit": orbit.canonical,
                                                 "image": image.canonical}
                    return Status.FAIL, payload

        return Status.PASS, payload
