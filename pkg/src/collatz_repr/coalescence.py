"""Orbit intersection and range sweeps of the relation ``n ~ 3n + 2``."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from . import _sweep
from .errors import DomainExcluded
from .numeric import _require_budget, _require_positive, is_power_of_two


@dataclass(frozen=True)
class CoalescenceResult:
    met: bool
    meet_value: Optional[int]
    index_left: Optional[int]
    index_right: Optional[int]
    budget_hit: bool


@dataclass
class SweepReport:
    range_start: int
    range_end: int
    checked: int = 0
    succeeded: int = 0
    failures: list[int] = field(default_factory=list)
    max_orbit_value: int = 0
    max_steps_seen: int = 0
    elapsed: float = 0.0

    def merge(self, other: "SweepReport") -> None:
        """Fold the report of the next subrange into this one."""
        self.range_end = max(self.range_end, other.range_end)
        self.checked += other.checked
        self.succeeded += other.succeeded
        self.failures.extend(other.failures)
        self.max_orbit_value = max(self.max_orbit_value, other.max_orbit_value)
        self.max_steps_seen = max(self.max_steps_seen, other.max_steps_seen)


class _Orbit:
    """One side of a lockstep expansion."""

    __slots__ = ("seen", "current", "index", "done", "exhausted", "max_steps")

    def __init__(self, start: int, max_steps: int):
        self.seen = {start: 0}
        self.current = start
        self.index = 0
        self.done = False
        self.exhausted = False
        self.max_steps = max_steps

    def advance(self) -> Optional[int]:
        """Take one step; return the new value, or None if the orbit has stopped."""
        if self.done:
            return None
        x = self.current
        if x == 1 and self.index > 0:
            self.done = True
            return None
        if self.index == self.max_steps:
            self.done = self.exhausted = True
            return None
        nxt = x >> 1 if x & 1 == 0 else 3 * x + 1
        if nxt in self.seen:
            # only the orbit of 1 closes a loop (1, 4, 2) before stopping at 1
            self.done = True
            return None
        self.index += 1
        self.current = nxt
        self.seen[nxt] = self.index
        return nxt


def coalesce(n1: int, n2: int, max_steps: int) -> CoalescenceResult:
    """First common value of the orbits of ``n1`` and ``n2``.

    Both orbits are expanded one step at a time, left then right, each for at
    most ``max_steps`` steps. An orbit stops once it reaches 1. The first
    value found in both orbits is reported together with its index in each.
    """
    _require_positive(n1)
    _require_positive(n2)
    _require_budget(max_steps)
    if n1 == n2:
        return CoalescenceResult(True, n1, 0, 0, False)
    left = _Orbit(n1, max_steps)
    right = _Orbit(n2, max_steps)
    while not (left.done and right.done):
        x = left.advance()
        if x is not None and x in right.seen:
            return CoalescenceResult(True, x, left.index, right.seen[x], False)
        y = right.advance()
        if y is not None and y in left.seen:
            return CoalescenceResult(True, y, left.seen[y], right.index, False)
    return CoalescenceResult(False, None, None, None, left.exhausted or right.exhausted)


def hypothesis_check(n: int, max_steps: int) -> CoalescenceResult:
    """Whether the orbits of ``n`` and ``3n + 2`` meet. Powers of two are rejected."""
    _require_positive(n)
    if is_power_of_two(n):
        raise DomainExcluded(f"{n} is a power of two")
    return coalesce(n, 3 * n + 2, max_steps)


def _hypothesis_chunk(lo: int, hi: int, max_steps: int, memo_cap: int) -> SweepReport:
    report = SweepReport(lo, hi)
    memo = _sweep.DescentMemo(memo_cap)
    for n in range(lo, hi + 1):
        if n > 1 and n & (n - 1) == 0:
            continue
        report.checked += 1
        a = memo.descend(n, max_steps)
        b = memo.descend(3 * n + 2, max_steps)
        if a is not None and b is not None:
            # both orbits contain 1, so they meet
            report.succeeded += 1
            report.max_steps_seen = max(report.max_steps_seen, a[0], b[0])
            report.max_orbit_value = max(report.max_orbit_value, a[1], b[1])
        elif coalesce(n, 3 * n + 2, max_steps).met:
            report.succeeded += 1
        else:
            report.failures.append(n)
    return report


def hypothesis_sweep(
    range_start: int, range_end: int, max_steps: int, workers: int = 1
) -> SweepReport:
    """Run :func:`hypothesis_check` for every non-power-of-two ``n`` in the range.

    Powers of two are skipped, not counted. ``max_orbit_value`` and
    ``max_steps_seen`` describe the orbits (of ``n`` and of ``3n + 2``) that
    reach 1 within budget. The report does not depend on ``workers``.
    """
    _require_positive(range_start)
    _require_budget(max_steps)
    if range_end < range_start:
        raise ValueError(f"empty range [{range_start}, {range_end}]")
    t0 = time.perf_counter()
    memo_cap = _sweep.memo_cap_for(3 * range_end + 2)
    parts = _sweep.run_partitioned(
        _hypothesis_chunk, range_start, range_end, workers, (max_steps, memo_cap)
    )
    report = SweepReport(range_start, range_end)
    for part in parts:
        report.merge(part)
    report.range_end = range_end
    report.elapsed = time.perf_counter() - t0
    return report
