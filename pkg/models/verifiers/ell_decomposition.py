import logging
from typing import Any, Dict, List, Sequence

from sympy import multiplicity

from models.lattice import FieldSpec, check_prime, check_sweep
from models.verifiers.base import BaseVerifier, Status, ells_dividing

logger = logging.getLogger(__name__)


def _is_ell_power(value: int, ell: int) -> bool:
    return value == ell ** multiplicity(ell, value)


class EllDecompositionVerifier(BaseVerifier):
    """k = k_reg + k_prim with ord(k_reg) prime to ell and ord(k_prim) a power of ell

    Uniqueness is checked by brute force: every sum a + b with a in the
    ell-regular subgroup and b in the ell-primary one is counted, and each
    k must be hit exactly once.
    """

    claim_id = "ell-decomposition"

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
        payload: Dict[str, Any] = {"ell": ell}

        for k in range(M):
            self._checkpoint()
            k_reg, k_prim = field.ell_decompose(k, ell)
            if (k_reg + k_prim) % M != k:
                payload["counterexample"] = {"law": "recomposition", "k": k, "k_reg": k_reg, "k_prim": k_prim}
                return Status.FAIL, payload
            if field.order(k_reg) % ell == 0 or not _is_ell_power(field.order(k_prim), ell):
                payload["counterexample"] = {"law": "orders", "k": k, "k_reg": k_reg, "k_prim": k_prim}
                return Status.FAIL, payload
            qk = field.frobenius_act(k)
            if field.ell_decompose(qk, ell) != (field.frobenius_act(k_reg), field.frobenius_act(k_prim)):
                payload["counterexample"] = {"law": "frobenius", "k": k}
                return Status.FAIL, payload

        regular = [a for a in range(M) if field.order(a) % ell]
        primary = [b for b in range(M) if _is_ell_power(field.order(b), ell)]
        hits = [0] * M
        for a in regular:
            for b in primary:
                self._checkpoint()
                hits[(a + b) % M] += 1
        for k, count in enumerate(hits):
            if count != 1:
                payload["counterexample"] = {"law": "uniqueness", "k": k, "splittings": count}
                return Status.FAIL, payload

        payload.update({"regular_subgroup": len(regular), "primary_subgroup": len(primary), "exponents_checked": M})
        return Status.PASS, payload
