import time
import logging
import threading
import concurrent.futures
from typing import Any, Dict, Iterator, List, Optional, Sequence

from sympy import factorint

from models.errors import ParameterError
from models.settings import get_settings, sweep_bound
from models.verifiers import BaseVerifier, Status, VerificationReport, create_verifier, verifier_class

logger = logging.getLogger(__name__)


def prime_powers(upto: int) -> List[int]:
    return [q for q in range(2, upto + 1) if len(factorint(q)) == 1]


def grid_points(claim: str, qs: Sequence[int], ns: Sequence[int], ells: Sequence[int] = (),
                bound: Optional[int] = None, **options) -> List[Dict[str, Any]]:
    """Points of a claim over q in qs, n in ns with q^n - 1 under the sweep bound, in grid order"""
    cls = verifier_class(claim)
    limit = sweep_bound(bound)
    points = []
    for q in qs:
        if len(factorint(q)) != 1:
            raise ParameterError(f"q={q} is not a prime power")
        for n in ns:
            if n < 1:
                raise ParameterError(f"n={n} must be a positive integer")
            if q ** n - 1 > limit:
                logger.debug(f"{claim}: skipping q={q}, n={n} over the sweep bound {limit}")
                continue
            points.extend(cls.expand(q, n, ells, **options))
    return points


class GridRunner:
    """Evaluates one claim over a list of grid points on a thread pool

    Reports come back in grid order whatever order the points finish in.
    """

    def __init__(self, claim: str, points: List[Dict[str, Any]], max_workers: Optional[int] = None,
                 timeout: Optional[float] = None, bound: Optional[int] = None):
        settings = get_settings()
        self.claim = claim
        self.points = points
        self.max_workers = max_workers or settings.grid_workers
        self.timeout = timeout if timeout is not None else settings.point_timeout
        self.bound = bound
        self.should_cancel = False
        self.counts = {status: 0 for status in Status}
        self._lock = threading.Lock()
        self._active: List[BaseVerifier] = []
        verifier_class(claim)

    def cancel(self):
        """Ask every running verifier to stop at its next checkpoint"""
        with self._lock:
            self.should_cancel = True
            for verifier in self._active:
                verifier.set_cancel(True)

    def _run_point(self, point: Dict[str, Any]) -> VerificationReport:
        # Each thread needs its own verifier instance
        verifier = create_verifier(self.claim, point, timeout=self.timeout, bound=self.bound)
        with self._lock:
            if self.should_cancel:
                verifier.set_cancel(True)
            self._active.append(verifier)
        try:
            report = verifier.run()
        finally:
            with self._lock:
                self._active.remove(verifier)
        with self._lock:
            self.counts[report.status] += 1
        return report

    def run(self) -> Iterator[VerificationReport]:
        start_time = time.time()
        logger.info(f"Verifying {self.claim} on {len(self.points)} points with {self.max_workers} threads")

        if self.max_workers <= 1:
            for point in self.points:
                yield self._run_point(point)
        else:
            executor = concurrent.futures.ThreadPoolExecutor(max_workers=self.max_workers)
            try:
                futures = [executor.submit(self._run_point, point) for point in self.points]
                for future in futures:
                    yield future.result()
            finally:
                self.cancel()
                try:
                    executor.shutdown(wait=True, cancel_futures=True)
                except TypeError:
                    executor.shutdown(wait=True)

        logger.info(
            f"{self.claim}: {self.counts[Status.PASS]} passed, {self.counts[Status.FAIL]} failed, "
            f"{self.counts[Status.INCONCLUSIVE]} inconclusive in {time.time() - start_time:.2f}s"
        )

    def exit_code(self) -> int:
        """0 all pass, 1 any failure, 4 inconclusive without failures"""
        if self.counts[Status.FAIL]:
            return 1
        if self.counts[Status.INCONCLUSIVE]:
            return 4
        return 0
