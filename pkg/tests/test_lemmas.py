import pytest

import oracle
from collatz_repr import (
    DomainError,
    NotFound,
    case3_inequality_audit,
    lemma2_check,
    lemma3_check,
    lemma4_check,
    theorem1_sweep,
)


def test_lemma2_examples():
    assert lemma2_check(8)
    assert 3**5 + 2 == 245 and 2**8 + 1 == 257
    assert not lemma2_check(7)
    assert not lemma2_check(2)


def test_lemma2_squared_form_matches_direct_even_cases():
    # for even a the original exponent is an integer, compare directly
    for a in range(2, 400, 2):
        assert lemma2_check(a) == (3 ** (a // 2 + 1) + 2 < 2**a + 1)


def test_lemma2_boundary():
    assert [a for a in range(1, 8) if lemma2_check(a)] == []
    assert all(lemma2_check(a) for a in range(8, 4097))


@pytest.mark.parametrize(
    "n, eps, m, target, k",
    [(12, 2, 3, 10, 3), (2, 1, 1, 5, 2), (4, 2, 1, 4, 3)],
)
def test_lemma3_examples(n, eps, m, target, k):
    out = lemma3_check(n)
    assert (out.epsilon, out.odd_part, out.target, out.k_found) == (eps, m, target, k)
    assert out.k_predicted == k


def test_lemma3_not_found():
    with pytest.raises(NotFound):
        lemma3_check(2**10, k_max=3)
    with pytest.raises(DomainError):
        lemma3_check(7)


@pytest.mark.parametrize("a, target, k", [(2, 4, 3), (3, 11, 5), (8, 82, 12)])
def test_lemma4_examples(a, target, k):
    out = lemma4_check(a)
    assert (out.target, out.k_found, out.k_predicted) == (target, k, k)


def test_lemma4_range():
    for a in range(1, 65):
        out = lemma4_check(a, 3 * a)
        assert out.k_found == out.k_predicted
        assert oracle_iterate(2**a + 1, out.k_found) == out.target


def oracle_iterate(n, k):
    for _ in range(k):
        n = oracle.step(n)
    return n


def test_lemma4_agrees_with_lemma3():
    for a in range(1, 65):
        assert lemma4_check(a) == lemma3_check(2**a)


def test_case3_audit_examples():
    rows = {r.a: r for r in case3_inequality_audit(12)}
    assert (rows[8].lemma2_holds, rows[8].floor_form_holds) == (True, True)
    assert (rows[5].lemma2_holds, rows[5].floor_form_holds) == (False, True)
    assert (rows[1].lemma2_holds, rows[1].floor_form_holds) == (False, False)
    assert all(r.lemma2_holds and r.floor_form_holds for r in rows.values() if r.a >= 8)
    with pytest.raises(DomainError):
        case3_inequality_audit(7)


def test_theorem1_examples():
    records, report = theorem1_sweep(3, 100, 10**4)
    assert report.failures == []
    assert all(r.encoded for r in records)
    assert [r.n for r in records if r.power_of_two] == [4, 8, 16, 32, 64]
    (rec,), _ = theorem1_sweep(11, 11, 10**4)
    assert rec.encoded and rec.sequence_length == 5 and not rec.power_of_two
    (rec,), _ = theorem1_sweep(16, 16, 10**4)
    assert rec.encoded and rec.power_of_two and rec.sequence_length == 2


def test_theorem1_budget_failures_are_data():
    records, report = theorem1_sweep(25, 30, 50)
    failing = [n for n in range(25, 31) if len(oracle.orbit_to_one(n)) - 1 > 50]
    assert report.failures == failing == [27]
    assert [r.n for r in records if not r.encoded] == failing
    assert report.checked == report.succeeded + len(report.failures)


def test_theorem1_stats_oracle():
    _, report = theorem1_sweep(1, 1000, 10**4)
    orbits = [oracle.orbit_to_one(n) for n in range(1, 1001)]
    assert report.max_steps_seen == max(len(o) - 1 for o in orbits)
    assert report.max_orbit_value == max(max(o) for o in orbits)


def test_theorem1_deterministic_across_workers():
    a = theorem1_sweep(1, 3000, 10**4, workers=1)
    b = theorem1_sweep(1, 3000, 10**4, workers=4)
    a[1].elapsed = b[1].elapsed = 0
    assert a == b
