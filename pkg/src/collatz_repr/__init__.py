"""Exact 3x+1 orbits, exponent-sequence representations, and empirical checks."""

from .coalescence import (
    CoalescenceResult,
    SweepReport,
    coalesce,
    hypothesis_check,
    hypothesis_sweep,
)
from .errors import (
    BudgetExhausted,
    CollatzError,
    DomainError,
    DomainExcluded,
    NonPositive,
    NotApplicable,
    NotDivisible,
    NotFound,
    NotMonotone,
    RepresentationError,
    TooShort,
)
from .lemmas import (
    Case3Row,
    Lemma3Outcome,
    TheoremSweepRecord,
    case3_inequality_audit,
    lemma2_check,
    lemma3_check,
    lemma4_check,
    theorem1_sweep,
)
from .numeric import (
    FactoredEven,
    Status,
    Trajectory,
    collatz_iterate,
    collatz_step,
    is_power_of_two,
    nu2,
    total_stopping_steps,
    trajectory,
)
from .representation import (
    EncodeResult,
    RSequence,
    decode,
    double_transform,
    encode,
    encode_reverse_walk,
    format_sequence,
    odd_inverse_transform,
    parse_sequence,
    validate,
)

__version__ = "0.1.0"
