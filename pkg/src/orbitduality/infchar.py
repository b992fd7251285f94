"""Infinitesimal characters as exact half-integer weight vectors.

Coordinates are stored doubled (as integers), so every norm is an exact
rational with denominator dividing 4.  The Weyl group acts by signed
permutations in types B and C and by evenly-signed permutations in type D;
canonical forms sort absolute values and, in type D, remember the sign of
the coordinate product.
"""

from dataclasses import dataclass
from fractions import Fraction

from .partitions import EPSILON, as_partition, size, union, uparrow
from .compgroups import canonical_split
from .sommers import sat_inverse


def rank(kind, ambient):
    return ambient // 2


@dataclass(frozen=True)
class Weight:
    """A vector in the weight space, with doubled integer coordinates."""
    kind: str
    halves: tuple

    def __post_init__(self):
        object.__setattr__(self, "halves", tuple(int(h) for h in self.halves))

    def __len__(self):
        return len(self.halves)

    def coords(self):
        return tuple(Fraction(h, 2) for h in self.halves)

    def __str__(self):
        return format_weight(self)


def norm_sq(w):
    return Fraction(sum(h * h for h in w.halves), 4)


def canonical(w):
    """Canonical form under the Weyl group: sorted absolute values plus, in
    type D, the sign of the coordinate product (normalized to + as soon as a
    zero coordinate is present)."""
    body = tuple(sorted((abs(h) for h in w.halves), reverse=True))
    sign = 1
    if w.kind == "D" and all(h != 0 for h in w.halves):
        for h in w.halves:
            if h < 0:
                sign = -sign
    return Weight(w.kind, body), sign


def dominant(w):
    return canonical(w)[0]


def w_equivalent(u, v):
    if u.kind != v.kind or len(u) != len(v):
        raise ValueError("weights live in different spaces")
    return canonical(u) == canonical(v)


def rho_plus(q, length=None):
    """Doubled positive string entries of q: each part v contributes
    v-1, v-3, ..., down to 1 or 2; padded with zeros to the given length."""
    out = []
    for v in q:
        out.extend(range(v - 1, 0, -2))
    out.sort(reverse=True)
    if length is None:
        length = size(q) // 2
    if len(out) > length:
        raise ValueError("rho_plus of %s needs %d slots, given %d"
                         % (q, len(out), length))
    return tuple(out) + (0,) * (length - len(out))


def f_transform(q, eps):
    """Box smoothing: move a box up at every gap >= 2 starting at an odd row
    (eps = 0) or an even row (eps = 1); for eps = 1 also grow the first row.
    The empty partition maps to [1] when eps = 1.
    """
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1")
    if not q:
        return (1,) if eps == 1 else ()
    out = list(q) + [0]
    start = 0 if eps == 0 else 1
    for i in range(start, len(out) - 1, 2):
        nxt = out[i + 1]
        if out[i] >= nxt + 2:
            out[i] -= 1
            out[i + 1] += 1
    if eps == 1:
        out[0] += 1
    return as_partition(out)


def split_by_multiplicity(q):
    """(multiplicity-1 rows, multiplicity-2 rows); higher multiplicity is an error."""
    ones, twos = [], []
    for v in sorted(set(q), reverse=True):
        m = q.count(v)
        if m == 1:
            ones.append(v)
        elif m == 2:
            twos.extend((v, v))
        else:
            raise ValueError("part %d has multiplicity %d > 2" % (v, m))
    return tuple(ones), tuple(twos)


def spread_pairs(y):
    """Replace every pair [v, v] with [v+1, v-1], dropping zeros."""
    out = []
    for v in sorted(set(y), reverse=True):
        if y.count(v) != 2:
            raise ValueError("input must consist of multiplicity-2 parts")
        out.extend((v + 1, v - 1))
    return as_partition(sorted(out, reverse=True))


def gamma_rigid_cover(orbit):
    """Infinitesimal character attached to a birationally rigid cover of the
    orbit, from the columns of its partition."""
    if orbit.kind not in ("B", "C", "D"):
        raise ValueError("classical types B, C, D only")
    from .partitions import transpose
    cols = transpose(orbit.parts)
    x, y = split_by_multiplicity(cols)
    parts = union(spread_pairs(y), f_transform(x, EPSILON[orbit.kind]))
    return Weight(orbit.kind, rho_plus(parts, rank(orbit.kind, orbit.ambient)))


def nu0_eta0(m):
    """Minimal-weight split of a marked partition: the split of its
    distinguished core extended by one pair per stripped gl factor, routed to
    the unmarked side when the size has the marking parity."""
    gl, core = sat_inverse(m)
    nu0, eta0 = canonical_split(core)
    eta_parity = 1 if m.kind in ("B", "D") else 0
    for a in gl:
        if a % 2 == eta_parity:
            eta0 = union(eta0, (a, a))
        else:
            nu0 = union(nu0, (a, a))
    return nu0, eta0


def gamma_la(m):
    """Infinitesimal character of a marked datum: positive string entries of
    the staggered core split plus one full string per stripped gl factor."""
    gl, core = sat_inverse(m)
    nu0, eta0 = canonical_split(core)
    parts = union(uparrow(nu0) if nu0 else (), eta0)
    for a in gl:
        parts = union(parts, (a, a))
    dual_kind = {"B": "C", "C": "B", "D": "D"}[m.kind]
    return Weight(dual_kind, rho_plus(parts, size(m.lam) // 2))


def parse_weight(text, kind="B"):
    """Parse "(5/2,3/2,1/2,1/2)" into a Weight."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError("weight text must be parenthesized")
    body = s[1:-1].strip()
    halves = []
    if body:
        for piece in body.split(","):
            f = Fraction(piece.strip())
            if f.denominator not in (1, 2):
                raise ValueError("coordinates must be half-integers")
            halves.append(int(2 * f))
    return Weight(kind, tuple(halves))


def format_weight(w):
    def fmt(h):
        return str(h // 2) if h % 2 == 0 else "%d/2" % h
    return "(" + ",".join(fmt(h) for h in w.halves) + ")"
