"""Command-line front end.

Exit status: 0 on success, 1 when a check ran and found a failure, 2 on
usage or domain errors.
"""

from __future__ import annotations

import argparse
import functools
import re
import sys
from dataclasses import dataclass
from typing import Any, Callable, Optional

from . import coalescence, lemmas, numeric, representation
from ._sweep import default_workers
from .errors import CollatzError, NotFound, RepresentationError
from .serialize import dumps, failures_csv, records_csv, _csv

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_DECIMAL = re.compile(r"(0|[1-9][0-9]*)\Z")


def nat(text: str) -> int:
    """Parse an unbounded nonnegative decimal; leading zeros are rejected."""
    if not _DECIMAL.match(text):
        raise argparse.ArgumentTypeError(f"not a canonical decimal integer: {text!r}")
    return int(text)


def sequence(text: str) -> representation.RSequence:
    try:
        return representation.parse_sequence(text)
    except RepresentationError as exc:
        raise argparse.ArgumentTypeError(f"{type(exc).__name__}: {exc}") from None


@dataclass
class Output:
    data: Any
    text: str
    csv: str
    failed: bool = False


def _one_row(**row) -> str:
    return _csv(row.keys(), [row.values()])


def cmd_step(args) -> Output:
    v = numeric.collatz_step(args.n)
    return Output({"n": str(args.n), "value": str(v)}, f"{v}\n", _one_row(n=args.n, value=v))


def cmd_traj(args) -> Output:
    t = numeric.trajectory(args.n, args.max_steps)
    text = ",".join(map(str, t.values)) + f"\n{t.status.value} after {t.steps} steps\n"
    rows = _csv(["index", "value"], enumerate(t.values))
    return Output(t, text, rows, t.status is not numeric.Status.REACHED_ONE)


def cmd_stop_steps(args) -> Output:
    k = numeric.total_stopping_steps(args.n, args.max_steps)
    shown = "none" if k is None else str(k)
    return Output(
        {"n": str(args.n), "steps": k}, shown + "\n", _one_row(n=args.n, steps=k), k is None
    )


def cmd_encode(args) -> Output:
    res = representation.encode(args.n, args.max_steps)
    seq = representation.format_sequence(res.sequence)
    return Output(
        {"n": str(args.n), **res.__dict__},
        seq + "\n",
        _one_row(n=args.n, sequence=seq, power_of_two_input=res.power_of_two_input),
    )


def cmd_decode(args) -> Output:
    v = representation.decode(args.seq)
    seq = representation.format_sequence(args.seq)
    return Output({"sequence": args.seq, "value": str(v)}, f"{v}\n", _one_row(sequence=seq, value=v))


def cmd_validate(args) -> Output:
    # parsing already validated; reaching here means the sequence is valid
    seq = representation.format_sequence(args.seq)
    v = representation.decode(args.seq)
    return Output(
        {"sequence": args.seq, "valid": True, "value": str(v)},
        f"valid {seq} = {v}\n",
        _one_row(sequence=seq, valid=True, value=v),
    )


def _transform(fn: Callable) -> Callable[[Any], Output]:
    def run(args) -> Output:
        out = fn(args.seq)
        seq = representation.format_sequence(out)
        v = representation.decode(out)
        return Output(
            {"sequence": out, "value": str(v)}, seq + "\n", _one_row(sequence=seq, value=v)
        )

    return run


def _coalesce_output(res: coalescence.CoalescenceResult) -> Output:
    if res.met:
        text = f"met at {res.meet_value} (indices {res.index_left}, {res.index_right})\n"
    else:
        text = "not met" + (" (budget exhausted)" if res.budget_hit else "") + "\n"
    rows = _one_row(
        met=res.met,
        meet_value=res.meet_value,
        index_left=res.index_left,
        index_right=res.index_right,
        budget_hit=res.budget_hit,
    )
    return Output(res, text, rows, not res.met)


def cmd_coalesce(args) -> Output:
    return _coalesce_output(coalescence.coalesce(args.n, args.m, args.max_steps))


def cmd_hypothesis(args) -> Output:
    return _coalesce_output(coalescence.hypothesis_check(args.n, args.max_steps))


def _report_text(report: coalescence.SweepReport) -> str:
    lines = [
        f"range [{report.range_start}, {report.range_end}]",
        f"checked {report.checked}, succeeded {report.succeeded}, failures {len(report.failures)}",
        f"max orbit value {report.max_orbit_value}, max steps {report.max_steps_seen}",
    ]
    if report.failures:
        lines.append("failing n: " + ",".join(map(str, report.failures)))
    return "\n".join(lines) + "\n"


def cmd_sweep_hypothesis(args) -> Output:
    _check_range(args.a, args.b)
    report = coalescence.hypothesis_sweep(args.a, args.b, args.max_steps, args.jobs)
    print(f"elapsed {report.elapsed:.3f}s", file=sys.stderr)
    return Output(report, _report_text(report), failures_csv(report), bool(report.failures))


def cmd_sweep_theorem1(args) -> Output:
    _check_range(args.a, args.b)
    records, report = lemmas.theorem1_sweep(args.a, args.b, args.max_steps, args.jobs)
    print(f"elapsed {report.elapsed:.3f}s", file=sys.stderr)
    if args.records:
        data = {"report": report, "records": records}
        rows = records_csv(records)
    else:
        data = report
        rows = failures_csv(report)
    return Output(data, _report_text(report), rows, bool(report.failures))


def cmd_lemma2(args) -> Output:
    ok = lemmas.lemma2_check(args.a)
    # the inequality is only claimed from 8 on
    return Output(
        {"a": args.a, "holds": ok},
        f"{str(ok).lower()}\n",
        _one_row(a=args.a, holds=ok),
        args.a >= 8 and not ok,
    )


def _outcome_output(out: lemmas.Lemma3Outcome) -> Output:
    text = (
        f"n={out.n} epsilon={out.epsilon} odd_part={out.odd_part} target={out.target} "
        f"k_found={out.k_found} k_predicted={out.k_predicted}\n"
    )
    return Output(out, text, records_csv([out]), not out.prediction_holds)


def cmd_lemma3(args) -> Output:
    return _outcome_output(lemmas.lemma3_check(args.n, args.k_max))


def cmd_lemma4(args) -> Output:
    return _outcome_output(lemmas.lemma4_check(args.a, args.k_max))


def cmd_audit_case3(args) -> Output:
    rows = lemmas.case3_inequality_audit(args.a)
    text = "".join(
        f"{r.a} {str(r.lemma2_holds).lower()} {str(r.floor_form_holds).lower()}\n" for r in rows
    )
    failed = any(r.a >= 8 and not (r.lemma2_holds and r.floor_form_holds) for r in rows)
    return Output(rows, text, records_csv(rows), failed)


def _check_range(a: int, b: int) -> None:
    if a < 1 or b < a:
        raise CollatzError(f"range must satisfy 1 <= A <= B, got [{a}, {b}]")


@functools.lru_cache(maxsize=None)
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-steps", type=nat, default=100_000, help="step budget per orbit")
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--jobs", type=nat, default=default_workers(), help="worker processes")
    common.add_argument("--output", help="write here instead of standard output")
    common.add_argument(
        "--timing", action="store_true", help="include wall time in JSON reports"
    )

    parser = argparse.ArgumentParser(
        prog="collatz-repr", description="3x+1 orbits, exponent representations and checks"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help: str, *positionals: tuple[str, Callable]):
        p = sub.add_parser(name, parents=[common], help=help)
        for dest, typ in positionals:
            p.add_argument(dest, type=typ)
        p.set_defaults(func=func)
        return p

    add("step", cmd_step, "one step of the map", ("n", nat))
    add("traj", cmd_traj, "orbit of N until 1 or budget", ("n", nat))
    add("stop-steps", cmd_stop_steps, "steps until the orbit reaches 1", ("n", nat))
    add("encode", cmd_encode, "canonical exponent sequence of N", ("n", nat))
    add("decode", cmd_decode, "integer represented by SEQ", ("seq", sequence))
    add("validate", cmd_validate, "check that SEQ is a valid representation", ("seq", sequence))
    add("double", _transform(representation.double_transform), "representation of 2n", ("seq", sequence))
    add(
        "odd-inverse",
        _transform(representation.odd_inverse_transform),
        "representation of (2n-1)/3",
        ("seq", sequence),
    )
    add("coalesce", cmd_coalesce, "first common value of two orbits", ("n", nat), ("m", nat))
    add("hypothesis", cmd_hypothesis, "whether n and 3n+2 coalesce", ("n", nat))
    add("sweep-hypothesis", cmd_sweep_hypothesis, "hypothesis check over [A, B]", ("a", nat), ("b", nat))
    add("lemma2", cmd_lemma2, "exact inequality test at A", ("a", nat))
    for name, func, pos in (("lemma3", cmd_lemma3, "n"), ("lemma4", cmd_lemma4, "a")):
        p = add(name, func, f"iteration formula check at {pos.upper()}", (pos, nat))
        p.add_argument("--k-max", type=nat, default=None, help="largest iterate searched")
    p = add(
        "sweep-theorem1", cmd_sweep_theorem1, "encode and round-trip every n in [A, B]", ("a", nat), ("b", nat)
    )
    p.add_argument("--records", action="store_true", help="emit per-n records")
    add("audit-case3", cmd_audit_case3, "inequality audit for a in [1, A]", ("a", nat))
    return parser


def render(out: Output, fmt: str, timing: bool) -> str:
    if fmt == "json":
        return dumps(out.data, timing=timing)
    if fmt == "csv":
        return out.csv
    return out.text


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.jobs < 1:
        args.jobs = 1
    try:
        out = args.func(args)
    except (CollatzError, ValueError) as exc:
        # NotFound is a verification outcome, not a usage problem
        print(f"{args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED if isinstance(exc, NotFound) else EXIT_USAGE
    rendered = render(out, args.format, args.timing)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return EXIT_FAILED if out.failed else EXIT_OK


def main() -> None:
    sys.exit(run())
