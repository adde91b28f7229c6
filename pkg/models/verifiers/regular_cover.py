"""
Regular covers of non-regular characters

For a non-regular orbit alpha over the context F_{q^n'}, and a >= 1, find
a prime ell and a character beta regular over F_{q^(a n')} whose
ell-regular part is the norm inflation alpha* of alpha, with ell prime to
q^(d_alpha) - 1. The search is deterministic: primes ascending, then the
ell-primary coset of alpha* in order. At most sweep_bound coset elements
are examined per search; primes whose coset was cut short are reported as
skipped.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from sympy import isprime, multiplicity, primefactors

from models.errors import ParameterError
from models.lattice import CharOrbit, FieldSpec, OrbitFilter
from models.settings import sweep_bound
from models.verifiers.base import BaseVerifier, Status

logger = logging.getLogger(__name__)

DEFAULT_A = 7


@dataclass(frozen=True)
class RegularCover:
    ell: int
    beta: int
    beta_canonical: int
    alpha_star: int
    skipped: tuple = ()

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "beta": self.beta,
            "beta_canonical": self.beta_canonical,
            "alpha_star": self.alpha_star,
            "skipped_primes": list(self.skipped),
        }


@dataclass
class CoverSearchFailure:
    searched: List[int] = field(default_factory=list)
    skipped: List[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"searched_primes": self.searched, "skipped_primes": self.skipped}


def _regularity_test(big: FieldSpec) -> Callable[[int], bool]:
    """k is regular iff it is not inflated from any maximal proper subfield"""
    factors = [big.inflation_factor(big.n // r) for r in primefactors(big.n)]
    return lambda k: all(k % factor for factor in factors)


def search_regular_cover(context: FieldSpec, alpha: CharOrbit, a: int = DEFAULT_A,
                         bound: Optional[int] = None, checkpoint: Callable[[], None] = lambda: None):
    """RegularCover on success, CoverSearchFailure otherwise"""
    if alpha.field != context:
        raise ParameterError(f"orbit lives over {alpha.field}, expected {context}")
    if alpha.is_regular:
        raise ParameterError(f"orbit {alpha} is regular; a regular cover is only sought for non-regular orbits")
    if a < 1:
        raise ParameterError(f"a={a} must be positive")

    limit = sweep_bound(bound)
    big = FieldSpec(context.p, context.q, a * context.n)
    alpha_star = big.norm_inflate(context.n, alpha.canonical)
    excluded = context.q ** context.stabilizer_degree(alpha.canonical) - 1
    is_regular = _regularity_test(big)

    failure = CoverSearchFailure()
    remaining = limit
    for ell in primefactors(big.M):
        if ell == context.p or excluded % ell == 0:
            continue
        ell_part = ell ** multiplicity(ell, big.M)
        step = big.M // ell_part
        for t in range(min(ell_part, remaining)):
            checkpoint()
            beta = (alpha_star + t * step) % big.M
            if is_regular(beta):
                logger.debug(f"regular cover of {alpha}: ell={ell}, beta={beta}")
                return RegularCover(ell, beta, big.orbit_of(beta).canonical, alpha_star, tuple(failure.skipped))
        if ell_part > remaining:
            logger.debug(f"regular cover of {alpha}: sweep bound reached inside the coset of ell={ell}")
            failure.skipped.append(ell)
            remaining = 0
        else:
            failure.searched.append(ell)
            remaining -= ell_part
    return failure


def recheck_regular_cover(context: FieldSpec, alpha: CharOrbit, a: int, cover: RegularCover) -> Dict[str, bool]:
    """Recompute the three defining conditions without the search shortcuts"""
    big = FieldSpec(context.p, context.q, a * context.n)
    d_alpha = context.stabilizer_degree(alpha.canonical)
    alpha_star = big.norm_inflate(context.n, alpha.canonical)
    ell_ok = isprime(cover.ell) and cover.ell != context.p and (context.q ** d_alpha - 1) % cover.ell != 0
    return {
        "beta_regular": big.orbit_of(cover.beta).is_regular,
        "ell_admissible": bool(ell_ok),
        "regular_part_matches": ell_ok and big.ell_regular_part(cover.beta, cover.ell) == alpha_star,
    }


class RegularCoverVerifier(BaseVerifier):
    claim_id = "regular-cover"

    def __init__(self, point: Dict[str, Any], **kwargs):
        super().__init__(point, **kwargs)
        self.a = self.point.setdefault('a', DEFAULT_A)
        if self.a < 1:
            raise ParameterError(f"a={self.a} must be positive")
        self.k = self.point.get('k')

    @classmethod
    def expand(cls, q: int, n: int, ells: Sequence[int] = (), **options) -> List[Dict[str, Any]]:
        point = {"q": q, "n": n, "a": options.get('a') or DEFAULT_A}
        if options.get('k') is not None:
            point["k"] = options['k']
        return [point]

    def _alphas(self) -> List[CharOrbit]:
        if self.k is not None:
            return [self.field.orbit_of(self.k)]
        return self.field.enumerate_orbits(OrbitFilter.NONREGULAR, self.bound)

    def check(self):
        alphas = self._alphas()
        witnesses = []
        unresolved = []
        for alpha in alphas:
            result = search_regular_cover(self.field, alpha, self.a, self.bound, self._checkpoint)
            if isinstance(result, CoverSearchFailure):
                if result.skipped:
                    unresolved.append({"alpha": alpha.canonical, **result.to_dict()})
                    continue
                return Status.FAIL, {"a": self.a, "counterexample": {"alpha": alpha.canonical, **result.to_dict()}}

            recheck = recheck_regular_cover(self.field, alpha, self.a, result)
            if not all(recheck.values()):
                counterexample = {"alpha": alpha.canonical, "cover": result.to_dict(), "recheck": recheck}
                return Status.FAIL, {"a": self.a, "counterexample": counterexample}
            witnesses.append({"alpha": alpha.canonical, **result.to_dict()})

        payload = {"a": self.a, "nonregular_orbits": len(alphas), "witnesses": witnesses}
        if unresolved:
            payload["unresolved"] = unresolved
            payload["reason"] = "the sweep bound ran out inside a coset"
            return Status.INCONCLUSIVE, payload
        return Status.PASS, payload
