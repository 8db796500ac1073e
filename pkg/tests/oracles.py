"""Independent test oracles.

These deliberately avoid the library's own code paths: determinant-based
invariant factors for integer matrices, trial-division factor checks for
the adequacy split, and definition-level recomputation of units and the
radical straight from the public arithmetic.
"""

from itertools import combinations
from math import gcd


def det(rows) -> int:
    """Determinant of a small integer matrix by cofactor expansion."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * rows[0][j] * det(minor)
    return total


def minors_gcd_diagonal(rows) -> list[int]:
    """Invariant factors of an integer matrix from gcds of k x k minors."""
    r, c = len(rows), len(rows[0])
    out = []
    g_prev = 1
    for k in range(1, min(r, c) + 1):
        g = 0
        for rs in combinations(range(r), k):
            for cs in combinations(range(c), k):
                sub = [[rows[i][j] for j in cs] for i in rs]
                g = gcd(g, det(sub))
        if g == 0 or g_prev == 0:
            out.append(0)
        else:
            out.append(g // g_prev)
        g_prev = g
    return out


def prime_factors(n: int) -> set[int]:
    """Trial-division prime support of |n| (empty for 0 and units)."""
    n = abs(n)
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def adequacy_clauses_by_trial_division(c: int, a: int, r: int, s: int) -> bool:
    """Check c = r*s, gcd(r, a) = 1, and rad(s) | rad(a) by full factoring."""
    if r * s != c or s <= 0:
        return False
    if gcd(r, a) != 1:
        return False
    if a == 0:
        return True  # every prime divides zero
    return prime_factors(s) <= prime_factors(a)


def brute_units(ring) -> dict:
    """Unit -> inverse map recomputed from the public arithmetic."""
    elems = list(ring.elements())
    out = {}
    for a in elems:
        for b in elems:
            if ring.mul(a, b) == ring.one:
                out[a] = b
                break
    return out


def brute_radical(ring) -> set:
    """J(R) from the definition: 1 - x*r is a unit for every r."""
    elems = list(ring.elements())
    units = set(brute_units(ring))
    return {
        x for x in elems
        if all(ring.sub(ring.one, ring.mul(x, r)) in units for r in elems)
    }


def brute_idempotents(ring) -> set:
    return {e for e in ring.elements() if ring.mul(e, e) == e}
