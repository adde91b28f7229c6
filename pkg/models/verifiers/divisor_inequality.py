import logging
from typing import Any, Dict, List, Sequence

from sympy import divisors

from models.errors import ParameterError
from models.verifiers.base import BaseVerifier, Status

logger = logging.getLogger(__name__)


class DivisorInequalityVerifier(BaseVerifier):
    """q^n - 1 > (q^d - 1)^2 for the largest proper divisor d of n

    The pass/fail decision uses a = b = d only. All other pairs of proper
    divisors are reported alongside as the general landscape.
    """

    claim_id = "divisor-inequality"

    def __init__(self, point: Dict[str, Any], **kwargs):
        super().__init__(point, **kwargs)
        if self.field.n < 2:
            raise ParameterError(f"n={self.field.n} has no proper divisors; need n > 1")

    @classmethod
    def expand(cls, q: int, n: int, ells: Sequence[int] = (), **options) -> List[Dict[str, Any]]:
        return [{"q": q, "n": n}] if n > 1 else []

    def check(self):
        q, n, M = self.field.q, self.field.n, self.field.M
        proper = [d for d in divisors(n) if d < n]
        d = proper[-1]
        bound = (q ** d - 1) ** 2

        pairs = []
        for a in proper:
            for b in proper:
                product = (q ** a - 1) * (q ** b - 1)
                pairs.append({"a": a, "b": b, "product": product, "holds": M > product})

        payload = {
            "M": M,
            "d": d,
            "bound": bound,
            "pairs": pairs,
            "general_pairs_hold": all(pair["holds"] for pair in pairs),
        }
        if M > bound:
            return Status.PASS, payload
        payload["counterexample"] = {"a": d, "b": d, "product": bound}
        return Status.FAIL, payload
