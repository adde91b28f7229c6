import time
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import primefactors

from models.errors import ParameterError, ResourceBoundError, VerificationTimeout
from models.lattice import FieldSpec
from models.settings import get_settings, sweep_bound

logger = logging.getLogger(__name__)


class Status(Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


@dataclass
class VerificationReport:
    """Outcome of one claim at one grid point; a FAIL always carries its counterexample"""

    claim: str
    point: Dict[str, Any]
    status: Status
    payload: Dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status is Status.FAIL and "counterexample" not in self.payload:
            raise ParameterError(f"{self.claim} failed at {self.point} without a counterexample")

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        record = {
            "claim": self.claim,
            "point": dict(self.point),
            "status": self.status.value,
            "payload": self.payload,
        }
        if timings:
            record["elapsed"] = round(self.elapsed, 6)
        return record

    def point_text(self) -> str:
        return " ".join(f"{key}={_point_value(value)}" for key, value in self.point.items())


def _point_value(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value)
    return str(value)


def ells_dividing(field: FieldSpec) -> List[int]:
    """Primes ell != p dividing M, ascending"""
    if field.M == 1:
        return []
    return [ell for ell in primefactors(field.M) if ell != field.p]


def twist_label(field: FieldSpec, s: int) -> int:
    """Exponent of the base character s pulled back to F_{q^n}^x"""
    return field.norm_inflate(1, s)


class BaseVerifier:
    """Base class for all claim verifiers with common functionality

    A verifier owns one grid point. Sweeps call _checkpoint() so that a
    cancel request or the per-point deadline stops them cooperatively.
    """

    claim_id = ""
    # checkpoint granularity: the clock is read once every this many ticks
    CHECK_EVERY = 1024

    def __init__(self, point: Dict[str, Any], **kwargs):
        self.point = dict(point)
        self.should_cancel = False
        self.timeout = kwargs.get('timeout')
        self.bound = sweep_bound(kwargs.get('bound'))
        self.work_cap = kwargs.get('work_cap') or get_settings().work_cap
        self.deadline: Optional[float] = None
        self._ticks = 0
        self.field = FieldSpec.over(self.point['q'], self.point['n'])

    def set_cancel(self, should_cancel: bool):
        """Set the cancel flag"""
        self.should_cancel = should_cancel

    @classmethod
    def expand(cls, q: int, n: int, ells: Sequence[int] = (), **options) -> List[Dict[str, Any]]:
        """Grid points this claim checks at (q, n)"""
        return [{"q": q, "n": n}]

    def check(self) -> Tuple[Status, Dict[str, Any]]:
        """Run the sweep and return (status, payload)"""
        raise NotImplementedError("Subclasses must implement check method")

    def _checkpoint(self):
        self._ticks += 1
        if self._ticks % self.CHECK_EVERY:
            return
        if self.should_cancel:
            raise VerificationTimeout("cancelled")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise VerificationTimeout(f"deadline of {self.timeout}s passed")

    def twist_mode(self, steps: int) -> str:
        """exhaustive while (q-1) * steps stays under the work cap, else generator"""
        return "exhaustive" if (self.field.q - 1) * steps <= self.work_cap else "generator"

    def twist_range(self, mode: str) -> Iterable[int]:
        if self.field.q == 2:
            return range(0)
        return range(1, self.field.q - 1) if mode == "exhaustive" else range(1, 2)

    def run(self) -> VerificationReport:
        start = time.monotonic()
        if self.timeout:
            self.deadline = start + self.timeout
        logger.info(f"{self.claim_id}: starting {self.point}")
        try:
            status, payload = self.check()
        except VerificationTimeout as e:
            status, payload = Status.INCONCLUSIVE, {"reason": f"timeout: {e}"}
        except ResourceBoundError as e:
            status, payload = Status.INCONCLUSIVE, {"reason": str(e)}
        elapsed = time.monotonic() - start

        report = VerificationReport(self.claim_id, self.point, status, payload, elapsed)
        log = logger.info if status is Status.PASS else logger.warning
        log(f"{self.claim_id}: {self.point} -> {status.value} ({elapsed:.3f}s)")
        return report
