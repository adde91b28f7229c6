import logging
from typing import Any, Dict

from models.verifiers.base import BaseVerifier, Status, twist_label

logger = logging.getLogger(__name__)


class DeltaTrivialityVerifier(BaseVerifier):
    """No nontrivial base twist fixes the orbit of the generator label 1

    Also checks q^n - 1 > (q^i - 1)(q - 1) for 0 <= i < n, the size bound
    that rules out q^i = 1 + inflate(s) for a nontrivial s.
    """

    claim_id = "delta-triviality"

    def check(self):
        field = self.field
        q, n, M = field.q, field.n, field.M
        payload: Dict[str, Any] = {}

        for i in range(n):
            if M <= (q ** i - 1) * (q - 1):
                payload["counterexample"] = {"law": "bound", "i": i}
                return Status.FAIL, payload

        generator = field.orbit_of(1)
        for s in range(1, q - 1):
            self._checkpoint()
            if 1 + twist_label(field, s) in generator:
                payload["counterexample"] = {"law": "fixed", "s": s}
                return Status.FAIL, payload

        payload.update({"generator_orbit_size": generator.size, "twists_checked": max(q - 2, 0)})
        return Status.PASS, payload
