"""Wall-clock timing for verification suites. Timings go to the log, never into reports."""

import itertools
import logging
import threading
import time
from typing import Dict, List, Optional, Tuple

logger = logging.getLogger(__name__)

RunId = Tuple[str, int]


class SuiteTimer:
    """In-memory timing tracker, one entry per suite run. Safe to share between threads."""

    def __init__(self):
        self._lock = threading.Lock()
        self._ids = itertools.count(1)
        # suite -> list of elapsed seconds
        self._runs: Dict[str, List[float]] = {}
        self._started: Dict[RunId, float] = {}

    def start(self, suite: str) -> RunId:
        """Open a run; concurrent runs of the same suite get distinct ids."""
        with self._lock:
            run_id = (suite, next(self._ids))
            self._started[run_id] = time.perf_counter()
        logger.info(f"Suite {suite} started (run {run_id[1]})")
        return run_id

    def stop(self, run_id: RunId, passed: Optional[bool] = None) -> float:
        suite = run_id[0]
        with self._lock:
            began = self._started.pop(run_id, None)
            if began is not None:
                elapsed = time.perf_counter() - began
                self._runs.setdefault(suite, []).append(elapsed)
        if began is None:
            logger.warning(f"Suite {suite} run {run_id[1]} stopped without being started")
            return 0.0
        outcome = "" if passed is None else (" pass" if passed else " FAIL")
        logger.info(f"Suite {suite} finished{outcome} in {elapsed:.2f}s")
        return elapsed

    def get_totals(self) -> Dict[str, float]:
        with self._lock:
            return {suite: sum(runs) for suite, runs in self._runs.items()}

    def get_counts(self) -> Dict[str, int]:
        with self._lock:
            return {suite: len(runs) for suite, runs in self._runs.items()}

    def in_flight(self) -> int:
        with self._lock:
            return len(self._started)

    def clear(self) -> None:
        with self._lock:
            self._runs.clear()
            self._started.clear()


timer = SuiteTimer()
