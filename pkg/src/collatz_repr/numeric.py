"""Exact arithmetic for the 3x+1 map.

Every function works on Python ints, so values never overflow regardless of
how far an orbit climbs. The map is the plain (unaccelerated) one:
``n -> n // 2`` for even ``n`` and ``n -> 3n + 1`` for odd ``n``; step counts
everywhere in the package follow that convention.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError


def _require_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"expected an integer, got {type(n).__name__}")
    if n < 1:
        raise DomainError(f"{n} is not a positive integer")


def _require_budget(max_steps: int) -> None:
    if max_steps < 0:
        raise DomainError(f"step budget must be nonnegative, got {max_steps}")


class Status(enum.Enum):
    REACHED_ONE = "ReachedOne"
    BUDGET_EXHAUSTED = "BudgetExhausted"


@dataclass(frozen=True)
class Trajectory:
    """Orbit prefix of ``start``; ``values[0] == start``."""

    start: int
    values: tuple[int, ...]
    status: Status

    @property
    def steps(self) -> int:
        return len(self.values) - 1

    @property
    def peak(self) -> int:
        return max(self.values)


@dataclass(frozen=True)
class FactoredEven:
    epsilon: int
    odd_part: int

    def value(self) -> int:
        return self.odd_part << self.epsilon


def collatz_step(n: int) -> int:
    _require_positive(n)
    return n >> 1 if n & 1 == 0 else 3 * n + 1


def collatz_iterate(n: int, k: int) -> int:
    """Apply the map ``k`` times to ``n``."""
    _require_positive(n)
    if k < 0:
        raise DomainError(f"iteration count must be nonnegative, got {k}")
    for _ in range(k):
        n = n >> 1 if n & 1 == 0 else 3 * n + 1
    return n


def trajectory(n: int, max_steps: int) -> Trajectory:
    """Follow the orbit of ``n`` until it first hits 1 or ``max_steps`` steps are taken."""
    _require_positive(n)
    _require_budget(max_steps)
    values = [n]
    x = n
    steps = 0
    while x != 1 and steps < max_steps:
        x = x >> 1 if x & 1 == 0 else 3 * x + 1
        values.append(x)
        steps += 1
    status = Status.REACHED_ONE if x == 1 else Status.BUDGET_EXHAUSTED
    return Trajectory(n, tuple(values), status)


def total_stopping_steps(n: int, max_steps: int) -> Optional[int]:
    """Least ``k`` with ``T^k(n) == 1``, or ``None`` if ``k`` would exceed ``max_steps``."""
    _require_positive(n)
    _require_budget(max_steps)
    x = n
    steps = 0
    while x != 1:
        if steps == max_steps:
            return None
        x = x >> 1 if x & 1 == 0 else 3 * x + 1
        steps += 1
    return steps


def nu2(n: int) -> FactoredEven:
    """Split an even ``n`` into its 2-adic valuation and odd part."""
    _require_positive(n)
    if n & 1:
        raise DomainError(f"{n} is odd")
    # n & -n isolates the lowest set bit
    epsilon = (n & -n).bit_length() - 1
    return FactoredEven(epsilon, n >> epsilon)


def is_power_of_two(n: int) -> bool:
    """Membership in {2, 4, 8, ...}. 1 is deliberately excluded."""
    _require_positive(n)
    return n > 1 and n & (n - 1) == 0
