"""Exact partition arithmetic underlying the classification of nilpotent orbits
in the classical Lie algebras so(2n+1), sp(2n), so(2n).

A partition is stored as a tuple of weakly decreasing positive integers (no
trailing zeros).  Types B/C/D carry a parity invariant epsilon: 0 for the
orthogonal types, 1 for the symplectic one.  A partition is of type B (resp.
C, D) when its size is odd (resp. even, even) and every even (resp. odd,
even) part occurs with even multiplicity.
"""

KINDS = ("A", "B", "C", "D")

# parity marker: parts congruent to EPSILON[kind] mod 2 are the constrained ones
EPSILON = {"B": 0, "C": 1, "D": 0}


def as_partition(parts):
    """Normalize an iterable of integers to a partition tuple.

    Zeros are dropped; negative or increasing input is rejected.
    """
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise ValueError("partition parts must be nonnegative")
    p = tuple(x for x in p if x > 0)
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError("partition parts must be weakly decreasing")
    return p


def size(p):
    return sum(p)


def transpose(p):
    """Reflect the Young diagram: result[i] = #{j : p[j] > i}."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def union(p, q):
    """Multiset union: merge the parts of p and q and re-sort."""
    return tuple(sorted(p + q, reverse=True))


def join(p, q):
    """Componentwise sum after zero-padding the shorter partition."""
    n = max(len(p), len(q))
    pp = p + (0,) * (n - len(p))
    qq = q + (0,) * (n - len(q))
    return tuple(a + b for a, b in zip(pp, qq))


def multiplicity(p, x):
    return p.count(x)


def height(p, x):
    """Number of parts >= x; defined whether or not x is a part."""
    if x < 1:
        raise ValueError("height is defined for x >= 1")
    return sum(1 for v in p if v >= x)


def dominates(p, q):
    """Prefix-sum dominance order; only defined between partitions of equal size."""
    if size(p) != size(q):
        raise ValueError("dominance compares partitions of equal size only")
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp < sq:
            return False
    return True


def is_type(p, kind):
    """Test the type-B/C/D parity condition (size parity plus multiplicities)."""
    if kind == "A":
        return True
    eps = EPSILON[kind]
    want_odd_size = kind == "B"
    if (size(p) % 2 == 1) != want_odd_size:
        return False
    return all(p.count(v) % 2 == 0 for v in set(p) if v % 2 == eps)


def is_very_even(p):
    """All parts even, each with even multiplicity (type D only)."""
    return all(v % 2 == 0 for v in p) and all(p.count(v) % 2 == 0 for v in set(p))


def collapse(p, kind):
    """Largest partition of the given type dominated by p (the X-collapse).

    Computed by repeatedly moving a box from the last row of the largest
    offending part down to the first row that can absorb it.
    """
    if kind == "A":
        return p
    eps = EPSILON[kind]
    if (size(p) % 2 == 1) != (kind == "B"):
        raise ValueError("size/kind mismatch: |p|=%d is not a type %s size" % (size(p), kind))
    q = list(p)
    while True:
        bad = [v for v in set(q) if v % 2 == eps and q.count(v) % 2 == 1]
        if not bad:
            return tuple(v for v in q if v)
        v = max(bad)
        i = max(k for k, x in enumerate(q) if x == v)
        q[i] -= 1
        for j in range(i + 1, len(q)):
            if q[j] <= v - 2:
                q[j] += 1
                break
        else:
            q.append(1)


def drop_box(p):
    """Remove one box from the last row (the operation l)."""
    if not p:
        raise ValueError("cannot remove a box from the empty partition")
    return as_partition(p[:-1] + (p[-1] - 1,))


def add_unit(p):
    """Append a part equal to 1 (the operation e)."""
    return p + (1,)


def bump_first(p):
    """Add one box to the first row; the empty partition becomes [1]."""
    if not p:
        return (1,)
    return (p[0] + 1,) + p[1:]


def drop_column_box(p):
    """Remove one box from the shortest column (transpose of drop_box)."""
    return transpose(drop_box(transpose(p)))


def decrement_all(p):
    """Subtract 1 from every part, dropping resulting zeros."""
    return tuple(v - 1 for v in p if v > 1)


def head(p, k):
    """The first k rows."""
    return p[:k]


def tail(p, k):
    """The rows after the first k."""
    return p[k:]


def uparrow(p):
    """Stagger a multiplicity-free equal-parity partition: +1 on odd rows,
    -1 on even rows (1-based).  Odd length is padded with one trailing zero,
    which then absorbs the -1; this is the convention used for symplectic
    markings, and it grows the size by one.
    """
    if not p:
        return ()
    q = list(p)
    if len(q) % 2 == 1:
        q.append(0)
    if len(set(p)) != len(p):
        raise ValueError("uparrow requires a multiplicity-free partition")
    if len({v % 2 for v in q}) != 1:
        raise ValueError("uparrow parity violation: parts of mixed parity")
    out = []
    for i, v in enumerate(q):
        out.append(v + 1 if i % 2 == 0 else max(v - 1, 0))
    return as_partition(sorted(out, reverse=True))


def uparrow2(q):
    """Two-row box move: [q1, q2] -> [q1 + 1, max(q2 - 1, 0)]."""
    if not 1 <= len(q) <= 2:
        raise ValueError("uparrow2 takes a partition with one or two rows")
    q2 = q[1] if len(q) == 2 else 0
    return as_partition((q[0] + 1, max(q2 - 1, 0)))


def enumerate_partitions(n, max_part=None):
    """Yield all partitions of n (largest part first), in reverse lex order."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in enumerate_partitions(n - first, first):
            yield (first,) + rest


def enumerate_type(kind, n):
    """Yield all partitions of n of the given classical type."""
    for p in enumerate_partitions(n):
        if is_type(p, kind):
            yield p


def parse_partition(text):
    """Parse the text form "[5,3,1]"; "[]" is the empty partition."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError("partition text must be bracketed, e.g. [5,3,1]")
    body = s[1:-1].strip()
    if not body:
        return ()
    return as_partition(body.split(","))


def format_partition(p):
    return "[" + ",".join(str(v) for v in p) + "]"
