import logging
from typing import Any, Dict, List, Sequence

from sympy import divisors

from models.lattice import FieldSpec, check_prime, check_sweep
from models.verifiers.base import BaseVerifier, Status, ells_dividing, twist_label

logger = logging.getLogger(__name__)


class ReductionCommutationVerifier(BaseVerifier):
    """Taking ell-regular parts commutes with Frobenius, base twists and norm inflation

    Base twists are swept exhaustively while the work cap allows; otherwise
    s = 1 is checked for every k, which covers all s because the
    ell-regular part is additive.
    """

    claim_id = "reduction-commutation"

    def __init__(self, point: Dict[str, Any], **kwargs):
        super().__init__(point, **kwargs)
        self.ell = self.point['ell']
        check_prime(self.ell, self.field.p)

    @classmethod
    def expand(cls, q: int, n: int, ells: Sequence[int] = (), **options) -> List[Dict[str, Any]]:
        chosen = list(ells) if ells else ells_dividing(FieldSpec.over(q, n))
        return [{"q": q, "n": n, "ell": ell} for ell in chosen]

    def check(self):
        field, ell = self.field, self.ell
        M = field.M
        check_sweep(f"character group of {field}", M, self.bound)
        reg = [field.ell_regular_part(k, ell) for k in range(M)]
        payload: Dict[str, Any] = {"ell": ell, "divides_M": M % ell == 0}

        for k in range(M):
            self._checkpoint()
            if reg[field.frobenius_act(k)] != field.frobenius_act(reg[k]):
                payload["counterexample"] = {"law": "frobenius", "k": k}
                return Status.FAIL, payload

        mode = self.twist_mode(M)
        payload["twist_mode"] = mode
        for s in self.twist_range(mode):
            shift = twist_label(field, s)
            reduced_shift = reg[shift]
            for k in range(M):
                self._checkpoint()
                if reg[(k + shift) % M] != (reg[k] + reduced_shift) % M:
                    payload["counterexample"] = {"law": "twist", "k": k, "s": s}
                    return Status.FAIL, payload

        for d in divisors(field.n):
            if d == field.n:
                continue
            sub = field.subfield(d)
            for j in range(sub.M):
                self._checkpoint()
                if reg[field.norm_inflate(d, j)] != field.norm_inflate(d, sub.ell_regular_part(j, ell)):
                    payload["counterexample"] = {"law": "norm-inflation", "d": d, "j": j}
                    return Status.FAIL, payload

        payload["exponents_checked"] = M
        return Status.PASS, payload
