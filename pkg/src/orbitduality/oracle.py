"""Brute-force certification of the minimal-weight theorem.

For a distinguished marked datum the admissible weights form a union, over
the markings in its class, of sets cut out by congruence and Richardson
conditions.  The candidate weight is certified minimal by enumerating every
dominant half-integer vector inside its norm shell and testing membership
exactly.
"""

from dataclasses import dataclass
from math import isqrt

from .partitions import collapse, size, transpose
from .orbits import Orbit
from .compgroups import (
    MarkedPartition,
    canonical_split,
    equivalent_markings,
    is_distinguished_marked,
    multiset_difference,
)
from .infchar import Weight, rho_plus, uparrow
from .partitions import union


def richardson_zero(kind, ambient, halves):
    """Richardson orbit induced from zero on the Levi singled out by a weight.

    The coordinates (doubled) must lie in one congruence class: all even
    (integers) or all odd (strict half-integers).  Equal absolute values of
    multiplicity q contribute a pair of columns of height q; zeros contribute
    one column holding the rank of the residual classical factor.
    """
    halves = tuple(abs(h) for h in halves)
    parities = {h % 2 for h in halves}
    if len(parities) > 1:
        raise ValueError("coordinates of one factor must share a congruence class")
    zeros = sum(1 for h in halves if h == 0)
    if 2 * len(halves) + (ambient % 2) != ambient:
        raise ValueError("coordinate count does not match the ambient size")
    columns = []
    for v in sorted({h for h in halves if h}, reverse=True):
        q = halves.count(v)
        columns.extend((q, q))
    residual = 2 * zeros + (ambient % 2)
    if residual:
        columns.append(residual)
    columns.sort(reverse=True)
    parts = transpose(tuple(columns))
    return Orbit(kind, ambient, collapse(parts, kind))


def _factor_layout(kind):
    """(parity of the marked-side coordinates, factor kinds). Doubled-integer
    parity: 1 = strict half-integers, 0 = integers."""
    if kind == "B":
        return 1, ("D", "B")
    if kind == "C":
        return 0, ("C", "C")
    return 1, ("D", "D")


def membership_tester(m):
    """A fast membership test for the admissible-weight set of a distinguished
    marked datum, closed over its precomputed lift markings."""
    if not is_distinguished_marked(m):
        raise ValueError("membership is tested on distinguished data")
    lam, kind = m.lam, m.kind
    nu_parity, (k1, k2) = _factor_layout(kind)
    lifts = []
    for nu in equivalent_markings(m):
        eta = multiset_difference(lam, nu)
        lifts.append((tuple(sorted(nu, reverse=True)), eta))

    def test(halves):
        side1 = tuple(h for h in halves if h % 2 == nu_parity)
        side2 = tuple(h for h in halves if h % 2 != nu_parity)
        for nu, eta in lifts:
            if 2 * len(side1) != size(nu):
                continue
            if 2 * len(side2) + (size(eta) % 2) != size(eta):
                continue
            try:
                o1 = richardson_zero(k1, size(nu), side1) if size(nu) else None
                o2 = richardson_zero(k2, size(eta), side2)
            except ValueError:
                continue
            if (o1 is None or o1.parts == nu) and o2.parts == eta:
                return True
        return False

    return test


def in_admissible_set(w, m):
    """Membership of a weight in the admissible set of a distinguished datum."""
    return membership_tester(m)(w.halves)


def dominant_shell(n, bound4):
    """All weakly decreasing nonnegative doubled-integer vectors of length n
    with squared norm (times 4) at most bound4."""
    out = []

    def rec(prefix, i, cap, budget):
        if i == n:
            out.append(tuple(prefix))
            return
        for v in range(min(cap, isqrt(budget)), -1, -1):
            prefix.append(v)
            rec(prefix, i + 1, v, budget - v * v)
            prefix.pop()

    rec([], 0, isqrt(bound4), bound4)
    return out


@dataclass(frozen=True)
class Certificate:
    datum: MarkedPartition
    candidate: Weight
    shell_size: int
    member: bool
    smaller_members: tuple
    equal_members: tuple

    @property
    def unique_min_orbit(self):
        return not self.equal_members

    @property
    def passed(self):
        return self.member and not self.smaller_members and self.unique_min_orbit


def verify_min(m):
    """Certify that the staggered-split weight of a distinguished datum is the
    unique minimal member of its admissible set, by exhaustive enumeration of
    the dominant shell it cuts out."""
    if not is_distinguished_marked(m):
        raise ValueError("certification applies to distinguished data")
    nu0, eta0 = canonical_split(m)
    n = size(m.lam) // 2
    cand = Weight(m.kind, rho_plus(union(uparrow(nu0) if nu0 else (), eta0), n))
    bound4 = sum(h * h for h in cand.halves)
    test = membership_tester(m)
    member = test(cand.halves)
    shell = dominant_shell(n, bound4)
    smaller, equal = [], []
    for pt in shell:
        if not test(pt):
            continue
        norm4 = sum(h * h for h in pt)
        if norm4 < bound4:
            smaller.append(pt)
        elif norm4 == bound4 and pt != cand.halves:
            equal.append(pt)
    return Certificate(m, cand, len(shell), member, tuple(smaller), tuple(equal))


def richardson_pair(m):
    """The pseudo-Levi orbit pair read off from the weight of a marked datum:
    split the coordinates by congruence class and induce from zero in the
    Levi each class singles out.  For special data this reproduces the
    saturation route computed in the covers module."""
    from .infchar import gamma_la
    w = gamma_la(m)
    nu_parity, (k1, k2) = _factor_layout(m.kind)
    side1 = tuple(h for h in w.halves if h % 2 == nu_parity)
    side2 = tuple(h for h in w.halves if h % 2 != nu_parity)
    n1 = 2 * len(side1)
    n2 = 2 * len(side2) + (1 if m.kind == "B" else 0)
    first = richardson_zero(k1, n1, side1) if n1 else Orbit(k1, 0, ())
    second = richardson_zero(k2, n2, side2) if n2 else Orbit(k2, 0, ())
    return first, second


def dominant_shell_naive(n, bound4):
    """Nested-loop reference enumerator for self-testing the recursion."""
    import itertools
    top = 0
    while top * top <= bound4:
        top += 1
    pts = []
    for tup in itertools.product(range(top), repeat=n):
        if all(tup[i] >= tup[i + 1] for i in range(n - 1)) and sum(h * h for h in tup) <= bound4:
            pts.append(tup)
    return sorted(pts)
