"""Range partitioning and the descent memo used by the sweeps."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Optional, Sequence

MEMO_LIMIT = 1 << 22


def memo_cap_for(largest: int) -> int:
    return min(largest + 1, MEMO_LIMIT)


def default_workers() -> int:
    return os.cpu_count() or 1


class DescentMemo:
    """Certified (steps to 1, orbit peak) facts for values below ``cap``.

    Facts are exact, so a sweep's results never depend on what has been
    memoized; the memo only shortens walks.
    """

    def __init__(self, cap: int):
        self.cap = cap
        # steps + 1, so that 0 means unknown
        self._steps = [0] * cap
        self._peak = [0] * cap

    def descend(self, x: int, max_steps: int) -> Optional[tuple[int, int]]:
        """``(steps, peak)`` for the orbit of ``x`` down to 1, or None past ``max_steps``."""
        cap = self.cap
        steps_memo = self._steps
        peak_memo = self._peak
        path = []
        while True:
            if x == 1:
                tail_steps, tail_peak = 0, 1
                break
            if x < cap and steps_memo[x]:
                tail_steps, tail_peak = steps_memo[x] - 1, peak_memo[x]
                break
            if len(path) == max_steps:
                return None
            path.append(x)
            x = x >> 1 if x & 1 == 0 else 3 * x + 1
        steps, peak = tail_steps, tail_peak
        for v in reversed(path):
            steps += 1
            if v > peak:
                peak = v
            if v < cap:
                steps_memo[v] = steps + 1
                peak_memo[v] = peak
        if steps > max_steps:
            return None
        return steps, peak


def partition(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Split ``[lo, hi]`` into at most ``parts`` contiguous nonempty subranges."""
    total = hi - lo + 1
    parts = max(1, min(parts, total))
    size, extra = divmod(total, parts)
    out = []
    start = lo
    for i in range(parts):
        end = start + size + (1 if i < extra else 0) - 1
        out.append((start, end))
        start = end + 1
    return out


def run_partitioned(
    func: Callable, lo: int, hi: int, workers: int, args: Sequence = ()
) -> list:
    """Apply ``func(sub_lo, sub_hi, *args)`` over subranges; results in range order."""
    chunks = partition(lo, hi, workers)
    if len(chunks) == 1:
        return [func(lo, hi, *args)]
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        futures = [pool.submit(func, a, b, *args) for a, b in chunks]
        return [f.result() for f in futures]
