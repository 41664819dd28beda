"""Codec between positive integers and nondecreasing exponent sequences.

A sequence ``(a_0, ..., a_{k+1})`` stands for the integer

    (2**a_{k+1} - sum(2**a_i * 3**(k - i) for i in 0..k)) / 3**(k + 1)

whenever that quotient is a positive integer. Integers whose orbit reaches 1
are exactly those built from 1 by the inverse maps ``x -> 2x`` and
``x -> (x - 1) / 3``, and :func:`encode` records that construction.

The text form used on the command line is a comma separated list of decimal
exponents, e.g. ``0,1,3,6,10``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import (
    BudgetExhausted,
    NonPositive,
    NotApplicable,
    NotDivisible,
    NotMonotone,
    RepresentationError,
    TooShort,
)
from .numeric import _require_budget, _require_positive, trajectory, Status


@lru_cache(maxsize=4096)
def _pow3(e: int) -> int:
    return 3**e


@dataclass(frozen=True)
class RSequence:
    """Nondecreasing exponents, at least two of them.

    Construction checks only shape; divisibility and positivity are checked
    by :func:`decode` (and therefore by :func:`validate`).
    """

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) < 2:
            raise TooShort(f"need at least 2 exponents, got {len(exps)}")
        if any(not isinstance(a, int) or isinstance(a, bool) for a in exps):
            raise RepresentationError("exponents must be integers")
        if exps[0] < 0:
            raise NotMonotone(f"negative exponent {exps[0]}")
        for prev, cur in zip(exps, exps[1:]):
            if cur < prev:
                raise NotMonotone(f"exponents decrease: {prev} > {cur}")

    def __len__(self) -> int:
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __str__(self) -> str:
        return format_sequence(self)


@dataclass(frozen=True)
class EncodeResult:
    sequence: RSequence
    power_of_two_input: bool


def _as_rsequence(s) -> RSequence:
    return s if isinstance(s, RSequence) else RSequence(tuple(s))


def _numerator(exps: tuple[int, ...]) -> int:
    # Horner in base 3: sum_{i=0..k} 2^{a_i} 3^{k-i}
    acc = 0
    for a in exps[:-1]:
        acc = acc * 3 + (1 << a)
    return (1 << exps[-1]) - acc


def decode(s) -> int:
    """Evaluate a sequence to the integer it represents.

    Raises NotDivisible if the power of three does not divide the numerator
    and NonPositive if the numerator is not positive.
    """
    exps = _as_rsequence(s).exponents
    num = _numerator(exps)
    if num <= 0:
        raise NonPositive(f"numerator {num} is not positive for {format_sequence(exps)}")
    q, r = divmod(num, _pow3(len(exps) - 1))
    if r:
        raise NotDivisible(
            f"3^{len(exps) - 1} does not divide {num} for {format_sequence(exps)}"
        )
    return q


def validate(s: Iterable[int]) -> RSequence:
    seq = _as_rsequence(s)
    decode(seq)
    return seq


def double_transform(s) -> RSequence:
    """Shift every exponent up by one; the decoded value doubles."""
    seq = _as_rsequence(s)
    return RSequence(tuple(a + 1 for a in seq.exponents))


def odd_inverse_transform(s) -> RSequence:
    """Map a representation of ``n`` to one of ``(2n - 1) / 3``.

    Requires ``n % 3 == 2``; otherwise ``(2n - 1) / 3`` is not an integer.
    """
    seq = _as_rsequence(s)
    n = decode(seq)
    if n % 3 != 2:
        raise NotApplicable(f"{n} is not congruent to 2 mod 3")
    return RSequence((0,) + tuple(a + 1 for a in seq.exponents))


def _halving_profile(n: int, max_steps: int) -> tuple[list[int], int]:
    """Halvings seen before each odd step, and the total number of halvings."""
    before_odd = []
    halvings = 0
    x = n
    steps = 0
    while x != 1:
        if steps == max_steps:
            raise BudgetExhausted(n, max_steps)
        if x & 1:
            before_odd.append(halvings)
            x = 3 * x + 1
        else:
            x >>= 1
            halvings += 1
        steps += 1
    return before_odd, halvings


def encode(n: int, max_steps: int) -> EncodeResult:
    """Canonical representation of ``n`` obtained from its orbit to 1.

    Walking the orbit backwards from 1, the first undoing of a ``3x+1`` step
    after ``c`` doublings seeds ``(0, c)``; later doublings and odd inverses
    apply :func:`double_transform` and :func:`odd_inverse_transform` (the
    doubling that precedes each odd inverse is absorbed by it). Unrolled,
    entry ``i`` counts the halvings that precede the ``i``-th odd step of the
    forward orbit and the last entry counts all halvings; that closed form is
    what is computed here. :func:`encode_reverse_walk` performs the walk
    literally.

    ``n == 1`` encodes as ``(0, 2)``. A power of two ``2**j`` has no odd step
    and encodes as ``(j, j + 2)`` with ``power_of_two_input`` set.
    """
    _require_positive(n)
    _require_budget(max_steps)
    if n == 1:
        return EncodeResult(RSequence((0, 2)), False)
    before_odd, halvings = _halving_profile(n, max_steps)
    if not before_odd:
        return EncodeResult(RSequence((halvings, halvings + 2)), True)
    before_odd.append(halvings)
    return EncodeResult(RSequence(tuple(before_odd)), False)


def encode_reverse_walk(n: int, max_steps: int) -> EncodeResult:
    """Same result as :func:`encode`, built step by step with the two transforms."""
    _require_positive(n)
    _require_budget(max_steps)
    traj = trajectory(n, max_steps)
    if traj.status is not Status.REACHED_ONE:
        raise BudgetExhausted(n, max_steps)
    if n == 1:
        return EncodeResult(RSequence((0, 2)), False)
    path = traj.values[::-1]  # 1, ..., n
    seq = None
    doublings = 0
    i = 1
    while i < len(path):
        prev, cur = path[i - 1], path[i]
        # undoing 3x+1 is a step with cur * 3 + 1 == prev; it follows a doubling
        if i + 1 < len(path) and path[i + 1] * 3 + 1 == cur:
            if seq is None:
                seq = RSequence((0, doublings + 1))
            else:
                seq = odd_inverse_transform(seq)
            i += 2
            continue
        assert cur == prev * 2
        if seq is None:
            doublings += 1
        else:
            seq = double_transform(seq)
        i += 1
    if seq is None:
        return EncodeResult(RSequence((doublings, doublings + 2)), True)
    return EncodeResult(seq, False)


def parse_sequence(text: str) -> RSequence:
    """Parse ``"0,1,3,6,10"`` and validate it. Whitespace around items is ignored."""
    items = [item.strip() for item in text.split(",")]
    exps = []
    for item in items:
        if not item or not item.isdigit() or not item.isascii():
            raise RepresentationError(f"invalid exponent {item!r} in {text!r}")
        exps.append(int(item))
    return validate(exps)


def format_sequence(s) -> str:
    exps = s.exponents if isinstance(s, RSequence) else s
    return ",".join(str(a) for a in exps)
