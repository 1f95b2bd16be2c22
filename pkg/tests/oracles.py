"""Naive reference implementations used only by the tests.

They enumerate with plain recursion on lists and Fractions, sharing no code
with the bitmask enumerators in the package.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def ordered_set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    for k in range(1, len(items) + 1):
        for first in itertools.combinations(items, k):
            rest = [x for x in items if x not in first]
            for tail in ordered_set_partitions(rest):
                yield [list(first)] + tail


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for p in set_partitions(rest):
        yield [[head]] + p
        for i in range(len(p)):
            yield p[:i] + [[head] + p[i]] + p[i + 1 :]


def inversion_sign(seq):
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def eps(P):
    return inversion_sign([x for b in P for x in sorted(b)])


def eps_prime(P):
    return (-1) ** sum(len(b) * (len(b) - 1) // 2 for b in P)


def prefix_positive(P, lam):
    s = Fraction(0)
    for b in P:
        s += sum(Fraction(lam[x - 1]) for x in b)
        if s <= 0:
            return False
    return True


def pair_partitions(items):
    """Unordered partitions into pairs plus at most one singleton, blocks sorted."""
    items = sorted(items)
    for p in set_partitions(items):
        sizes = sorted(len(b) for b in p)
        if all(s == 2 for s in sizes if s != 1) and sizes.count(1) == len(items) % 2:
            yield sorted(sorted(b) for b in p)


def c1(a):
    return 1 if a > 0 else 0


def c2(a, b):
    if a + b <= 0 or a <= 0:
        return 0
    return 1 if b > 0 else 2


def c_of(p, lam):
    out = 1
    for b in p:
        if len(b) == 1:
            out *= c1(Fraction(lam[b[0] - 1]))
        else:
            out *= c2(Fraction(lam[b[0] - 1]), Fraction(lam[b[1] - 1]))
    return out


def alternating_count(lam):
    n = len(lam)
    return sum((-1) ** len(P) for P in ordered_set_partitions(range(1, n + 1)) if prefix_positive(P, lam))


def signed_pair_sides(lam):
    n = len(lam)
    lhs = sum(
        (-1) ** len(P) * eps(P) * eps_prime(P)
        for P in ordered_set_partitions(range(1, n + 1))
        if prefix_positive(P, lam)
    )
    rhs = (-1) ** n * sum(eps(p) * c_of(p, lam) for p in pair_partitions(range(1, n + 1)))
    return lhs, rhs


def restrict(P, J):
    J = set(J)
    return [[x for x in b if x in J] for b in P if J.intersection(b)]


def herb_sides(r, t, y, I_plus, I_minus):
    """Herb coefficient against the glued-partition sum, by plain recursion."""
    y = [Fraction(x) for x in y]
    front = 1
    for j in range(t):
        front *= c1(y[r + 2 * j] + y[r + 2 * j + 1])
    side = lambda I: sum(eps(p) * c_of(p, y) for p in pair_partitions(I))
    lhs = front * side(I_plus) * side(I_minus)
    groups = [[i] for i in range(1, r + 1)] + [[r + 2 * j + 1, r + 2 * j + 2] for j in range(t)]
    total = 0
    for Q in ordered_set_partitions(range(len(groups))):
        P = [sorted(x for g in b for x in groups[g]) for b in Q]
        if not prefix_positive(P, y):
            continue
        Pp, Pm = restrict(P, I_plus), restrict(P, I_minus)
        total += (-1) ** len(P) * eps(Pp) * eps(Pm) * eps_prime(Pp) * eps_prime(Pm)
    return lhs, (-1) ** (r + t) * total
