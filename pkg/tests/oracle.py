"""Independent brute-force references. Deliberately naive; no package imports."""

from fractions import Fraction


def step(n):
    if n % 2 == 0:
        return n // 2
    return 3 * n + 1


def orbit_to_one(n, limit=10**6):
    out = [n]
    while out[-1] != 1:
        out.append(step(out[-1]))
        assert len(out) <= limit
    return out


def absorbing_orbit(n, max_steps):
    """Orbit list as used for intersection: stops at 1; the orbit of 1 is 1, 4, 2."""
    if n == 1:
        return [1, 4, 2][: max_steps + 1]
    out = [n]
    while out[-1] != 1 and len(out) <= max_steps:
        out.append(step(out[-1]))
    return out


def first_meet(n1, n2, max_steps):
    """Earliest common value when the left orbit moves first in each round."""
    left = absorbing_orbit(n1, max_steps)
    right = absorbing_orbit(n2, max_steps)
    first_left = {}
    for i, v in enumerate(left):
        first_left.setdefault(v, i)
    best = None
    for j, v in enumerate(right):
        if v not in first_left:
            continue
        i = first_left[v]
        # (round, side): left moves first within a round
        found = max((i, 0), (j, 1))
        key = (found, i)
        if best is None or key < best[0]:
            best = (key, v, i, j)
    if best is None:
        return None
    return best[1], best[2], best[3]


def decode_fraction(exps):
    k = len(exps) - 2
    total = Fraction(2) ** exps[-1]
    for i in range(k + 1):
        total -= Fraction(2) ** exps[i] * Fraction(3) ** (k - i)
    return total / Fraction(3) ** (k + 1)


def valuation(n):
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    return e, n
