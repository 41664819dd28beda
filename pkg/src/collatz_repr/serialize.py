"""JSON and CSV forms of the result types.

Integer values that may exceed 53 bits (orbit values, targets, range bounds)
are written as decimal strings; counts and exponents are plain JSON numbers.
Field names match the dataclass attributes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import fields
from typing import Any, Iterable, Optional

from .coalescence import CoalescenceResult, SweepReport
from .lemmas import Case3Row, Lemma3Outcome, TheoremSweepRecord
from .numeric import FactoredEven, Trajectory
from .representation import EncodeResult, RSequence


def _nat(v: Optional[int]) -> Optional[str]:
    return None if v is None else str(v)


def to_jsonable(obj: Any, *, timing: bool = False) -> Any:
    if isinstance(obj, Trajectory):
        return {
            "start": _nat(obj.start),
            "values": [str(v) for v in obj.values],
            "status": obj.status.value,
        }
    if isinstance(obj, FactoredEven):
        return {"epsilon": obj.epsilon, "odd_part": _nat(obj.odd_part)}
    if isinstance(obj, RSequence):
        return list(obj.exponents)
    if isinstance(obj, EncodeResult):
        return {
            "sequence": list(obj.sequence.exponents),
            "power_of_two_input": obj.power_of_two_input,
        }
    if isinstance(obj, CoalescenceResult):
        return {
            "met": obj.met,
            "meet_value": _nat(obj.meet_value),
            "index_left": obj.index_left,
            "index_right": obj.index_right,
            "budget_hit": obj.budget_hit,
        }
    if isinstance(obj, SweepReport):
        return {
            "range_start": _nat(obj.range_start),
            "range_end": _nat(obj.range_end),
            "checked": obj.checked,
            "succeeded": obj.succeeded,
            "failures": [str(v) for v in obj.failures],
            "max_orbit_value": _nat(obj.max_orbit_value),
            "max_steps_seen": obj.max_steps_seen,
            # wall time breaks byte-identical output, so it is opt-in
            "elapsed": obj.elapsed if timing else None,
        }
    if isinstance(obj, Lemma3Outcome):
        return {
            "n": _nat(obj.n),
            "epsilon": obj.epsilon,
            "odd_part": _nat(obj.odd_part),
            "target": _nat(obj.target),
            "k_found": obj.k_found,
            "k_predicted": obj.k_predicted,
        }
    if isinstance(obj, TheoremSweepRecord):
        return {
            "n": _nat(obj.n),
            "encoded": obj.encoded,
            "power_of_two": obj.power_of_two,
            "sequence_length": obj.sequence_length,
        }
    if isinstance(obj, Case3Row):
        return obj._asdict()
    if isinstance(obj, dict):
        return {k: to_jsonable(v, timing=timing) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v, timing=timing) for v in obj]
    return obj


def dumps(obj: Any, *, timing: bool = False) -> str:
    return json.dumps(to_jsonable(obj, timing=timing), indent=2) + "\n"


def sweep_report_from_json(data: dict) -> SweepReport:
    """Inverse of the SweepReport JSON form (``elapsed`` of null reads as 0)."""
    return SweepReport(
        range_start=int(data["range_start"]),
        range_end=int(data["range_end"]),
        checked=data["checked"],
        succeeded=data["succeeded"],
        failures=[int(v) for v in data["failures"]],
        max_orbit_value=int(data["max_orbit_value"]),
        max_steps_seen=data["max_steps_seen"],
        elapsed=data["elapsed"] or 0.0,
    )


def coalescence_from_json(data: dict) -> CoalescenceResult:
    meet = data["meet_value"]
    return CoalescenceResult(
        met=data["met"],
        meet_value=None if meet is None else int(meet),
        index_left=data["index_left"],
        index_right=data["index_right"],
        budget_hit=data["budget_hit"],
    )


def _csv(header: Iterable[str], rows: Iterable[Iterable[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(header))
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    return buf.getvalue()


def failures_csv(report: SweepReport) -> str:
    """One row per failing ``n``."""
    return _csv(["n"], ([n] for n in report.failures))


def records_csv(records: Iterable[Any]) -> str:
    """One row per dataclass or named-tuple record."""
    records = list(records)
    if not records:
        return ""
    first = records[0]
    if isinstance(first, tuple) and hasattr(first, "_fields"):
        header = list(first._fields)
    else:
        header = [f.name for f in fields(first)]
    return _csv(header, ([getattr(r, h) for h in header] for r in records))
