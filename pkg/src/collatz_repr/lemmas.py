"""Executable checks of the inequality, iteration and representability claims.

All arithmetic is on exact integers; nothing here touches floating point.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import _sweep
from .coalescence import SweepReport
from .errors import BudgetExhausted, DomainError, NotFound
from .numeric import _require_budget, _require_positive, nu2
from .representation import decode, encode


def lemma2_check(a: int) -> bool:
    """Exact test of ``3**(a/2 + 1) + 2 < 2**a + 1``.

    For ``a >= 1`` both ``3**(a/2 + 1)`` and ``2**a - 1`` are positive, so the
    inequality is equivalent to ``3**(a + 2) < (2**a - 1)**2``.
    """
    if a < 1:
        raise DomainError(f"a must be at least 1, got {a}")
    return 3 ** (a + 2) < ((1 << a) - 1) ** 2


@dataclass(frozen=True)
class Lemma3Outcome:
    n: int
    epsilon: int
    odd_part: int
    target: int
    k_found: int
    k_predicted: int

    @property
    def prediction_holds(self) -> bool:
        return self.k_found == self.k_predicted


def lemma3_target(epsilon: int, odd_part: int) -> int:
    if epsilon % 2 == 0:
        return 3 ** (epsilon // 2) * odd_part + 1
    return 3 ** (epsilon // 2 + 1) * odd_part + 2


def lemma3_predicted_steps(epsilon: int) -> int:
    if epsilon % 2 == 0:
        return 3 * epsilon // 2
    return 3 * (epsilon - 1) // 2 + 2


def lemma3_check(n: int, k_max: Optional[int] = None) -> Lemma3Outcome:
    """Search for the least ``k <= k_max`` with ``T^k(n + 1)`` equal to the closed form.

    ``n`` must be even. ``k_max`` defaults to ``64 + 3 * epsilon``. The step
    count is searched rather than assumed; ``k_predicted`` holds the closed
    form count for comparison.
    """
    factored = nu2(n)
    eps, m = factored.epsilon, factored.odd_part
    if k_max is None:
        k_max = 64 + 3 * eps
    _require_budget(k_max)
    target = lemma3_target(eps, m)
    x = n + 1
    for k in range(k_max + 1):
        if x == target:
            return Lemma3Outcome(n, eps, m, target, k, lemma3_predicted_steps(eps))
        x = x >> 1 if x & 1 == 0 else 3 * x + 1
    raise NotFound(f"T^k({n + 1}) never equals {target} for k <= {k_max}")


def lemma4_check(a: int, k_max: Optional[int] = None) -> Lemma3Outcome:
    """:func:`lemma3_check` at ``n = 2**a``, whose odd part is 1."""
    if a < 1:
        raise DomainError(f"a must be at least 1, got {a}")
    return lemma3_check(1 << a, k_max)


class Case3Row(NamedTuple):
    a: int
    lemma2_holds: bool
    floor_form_holds: bool


def case3_inequality_audit(a_max: int) -> list[Case3Row]:
    """For each ``a`` in ``[1, a_max]``: the Lemma 2 test and ``3**(a//2 + 1) + 2 < 2**a + 1``."""
    if a_max < 8:
        raise DomainError(f"a_max must be at least 8, got {a_max}")
    return [
        Case3Row(a, lemma2_check(a), 3 ** (a // 2 + 1) + 2 < (1 << a) + 1)
        for a in range(1, a_max + 1)
    ]


@dataclass(frozen=True, slots=True)
class TheoremSweepRecord:
    n: int
    encoded: bool
    power_of_two: bool
    sequence_length: int


def _theorem1_chunk(lo: int, hi: int, max_steps: int):
    report = SweepReport(lo, hi)
    records = []
    memo = _sweep.DescentMemo(_sweep.memo_cap_for(hi))
    for n in range(lo, hi + 1):
        report.checked += 1
        try:
            result = encode(n, max_steps)
        except BudgetExhausted:
            records.append(TheoremSweepRecord(n, False, n > 1 and n & (n - 1) == 0, 0))
            report.failures.append(n)
            continue
        ok = decode(result.sequence) == n
        records.append(
            TheoremSweepRecord(n, ok, result.power_of_two_input, len(result.sequence))
        )
        if not ok:
            report.failures.append(n)
            continue
        report.succeeded += 1
        steps, peak = memo.descend(n, max_steps)
        if steps > report.max_steps_seen:
            report.max_steps_seen = steps
        if peak > report.max_orbit_value:
            report.max_orbit_value = peak
    return records, report


def theorem1_sweep(
    range_start: int, range_end: int, max_steps: int, workers: int = 1
) -> tuple[list[TheoremSweepRecord], SweepReport]:
    """Encode every ``n`` in the range and certify each by decoding back.

    Powers of two succeed through the fallback form and carry the
    ``power_of_two`` flag. ``max_orbit_value`` and ``max_steps_seen`` cover
    the orbits that reach 1 within budget.
    """
    _require_positive(range_start)
    _require_budget(max_steps)
    if range_end < range_start:
        raise ValueError(f"empty range [{range_start}, {range_end}]")
    t0 = time.perf_counter()
    parts = _sweep.run_partitioned(
        _theorem1_chunk, range_start, range_end, workers, (max_steps,)
    )
    records: list[TheoremSweepRecord] = []
    report = SweepReport(range_start, range_end)
    for part_records, part_report in parts:
        records.extend(part_records)
        report.merge(part_report)
    report.range_end = range_end
    report.elapsed = time.perf_counter() - t0
    return records, report
