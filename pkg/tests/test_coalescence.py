import pytest
from hypothesis import given, settings, strategies as st

import oracle
from collatz_repr import DomainExcluded, coalesce, hypothesis_check, hypothesis_sweep


def _triple(r):
    return r.meet_value, r.index_left, r.index_right


def test_coalesce_examples():
    assert _triple(coalesce(3, 11, 10**4)) == (10, 1, 8)
    assert _triple(coalesce(5, 17, 10**4)) == (5, 0, 7)
    assert _triple(coalesce(123456789, 123456789, 10)) == (123456789, 0, 0)


def test_hypothesis_examples():
    r = hypothesis_check(3, 10**4)
    assert r.met and r.meet_value == 10
    r = hypothesis_check(1, 10**4)
    assert _triple(r) == (4, 1, 3)
    with pytest.raises(DomainExcluded):
        hypothesis_check(8, 10**4)


def test_budget_hit():
    r = coalesce(7, 9, 2)
    assert not r.met and r.budget_hit
    assert r.meet_value is None


def test_against_oracle():
    for a in range(1, 120):
        for b in range(1, 120):
            r = coalesce(a, b, 10**4)
            assert r.met
            assert _triple(r) == oracle.first_meet(a, b, 10**4), (a, b)


@given(st.integers(1, 10**9), st.integers(1, 10**9))
def test_symmetry(a, b):
    r1 = coalesce(a, b, 10**4)
    r2 = coalesce(b, a, 10**4)
    assert r1.met == r2.met
    assert r1.meet_value == r2.meet_value
    assert (r1.index_left, r1.index_right) == (r2.index_right, r2.index_left)


@given(st.integers(1, 10**6), st.integers(1, 10**6), st.integers(0, 400))
def test_budget_monotone(a, b, budget):
    r = coalesce(a, b, budget)
    if r.met:
        for bigger in (budget + 1, budget + 17, 10**4):
            assert _triple(coalesce(a, b, bigger)) == _triple(r)


@given(st.integers(1, 10**6), st.integers(0, 300))
def test_budget_monotone_hypothesis_pairs(n, budget):
    r = coalesce(n, 3 * n + 2, budget)
    if r.met:
        assert _triple(coalesce(n, 3 * n + 2, 10**4)) == _triple(r)


def test_memoized_sweep_matches_lockstep():
    report = hypothesis_sweep(1, 10**4, 10**4, workers=1)
    expected = [
        n for n in range(1, 10**4 + 1)
        if not (n > 1 and n & (n - 1) == 0) and not coalesce(n, 3 * n + 2, 10**4).met
    ]
    assert report.failures == expected == []
    assert report.checked == 10**4 - 13


def test_tight_budget_sweep_matches_lockstep():
    # with a small budget some orbits cannot reach 1; memo and fallback must agree
    budget = 40
    report = hypothesis_sweep(1, 3000, budget)
    expected = [
        n for n in range(1, 3001)
        if not (n > 1 and n & (n - 1) == 0) and not coalesce(n, 3 * n + 2, budget).met
    ]
    assert report.failures == expected
    assert expected  # the budget really bites
    assert report.checked == report.succeeded + len(report.failures)


def test_sweep_examples():
    r = hypothesis_sweep(3, 1000, 10**4)
    assert r.failures == [] and r.succeeded == r.checked == 998 - 8
    r = hypothesis_sweep(3, 3, 10**4)
    assert (r.checked, r.succeeded) == (1, 1)
    r = hypothesis_sweep(4, 4, 10**4)
    assert r.checked == 0


def test_sweep_statistics_oracle():
    r = hypothesis_sweep(1, 500, 10**4)
    orbits = [oracle.orbit_to_one(x) for n in range(1, 501)
              if not (n > 1 and n & (n - 1) == 0) for x in (n, 3 * n + 2)]
    assert r.max_steps_seen == max(len(o) - 1 for o in orbits)
    assert r.max_orbit_value == max(max(o) for o in orbits)


@settings(deadline=None, max_examples=5)
@given(st.integers(1, 5000), st.integers(0, 400))
def test_sweep_deterministic_across_workers(lo, width):
    r1 = hypothesis_sweep(lo, lo + width, 10**4, workers=1)
    r4 = hypothesis_sweep(lo, lo + width, 10**4, workers=4)
    r1.elapsed = r4.elapsed = 0
    assert r1 == r4
