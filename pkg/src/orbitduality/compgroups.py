"""Component groups of classical nilpotent orbits and their canonical quotient.

For an orbit O_lam of g_eps(N) the component group A(O) is elementary abelian
of exponent 2, generated by one involution per distinct part of lam of parity
different from eps.  Elements are stored as frozensets of those part values
(the support); the product is symmetric difference.  The canonical quotient
Abar(O) = A(O)/N is controlled by the markable parts of lam, and markings of
lam by subsets of markable parts parameterize the pairs (orbit, conjugacy
class in Abar) that drive the duality maps.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .partitions import (
    EPSILON,
    as_partition,
    format_partition,
    height,
    is_very_even,
    parse_partition,
    size,
    union,
    uparrow,
)
from .orbits import Orbit

IDENTITY = frozenset()


def eps_parts(lam, kind):
    """The rows of lam whose parity differs from eps (with multiplicity)."""
    eps = EPSILON[kind]
    return tuple(v for v in lam if v % 2 != eps)


def distinct_eps_values(lam, kind):
    return tuple(sorted(set(eps_parts(lam, kind)), reverse=True))


def mul(a, b):
    return a ^ b


def span(generators):
    """Closure of a set of involutions under symmetric difference."""
    group = {IDENTITY}
    frontier = [IDENTITY]
    gens = [frozenset(g) for g in generators]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x ^ g
            if y not in group:
                group.add(y)
                frontier.append(y)
    return frozenset(group)


def a_group_elements(orbit):
    """All elements of A(O): even-size supports for B/D, all supports for C."""
    vals = distinct_eps_values(orbit.parts, orbit.kind)
    even_only = EPSILON[orbit.kind] == 0
    out = []
    for r in range(len(vals) + 1):
        if even_only and r % 2 == 1:
            continue
        out.extend(frozenset(c) for c in combinations(vals, r))
    return out


@dataclass(frozen=True)
class GroupData:
    eps_values: tuple      # distinct parts of lam^eps
    a_rank: int            # log2 |A(O)|
    a_ad_rank: int         # log2 |A^ad(O)|
    upsilon_tilde: frozenset
    s1_nonempty: bool


def group_data(orbit):
    """Ranks of A(O) and A^ad(O) and the central involution v-tilde."""
    if orbit.kind == "A":
        return GroupData((), 0, 0, IDENTITY, False)
    lam, kind = orbit.parts, orbit.kind
    vals = distinct_eps_values(lam, kind)
    r = len(vals)
    s1 = frozenset(v for v in vals if lam.count(v) % 2 == 1)
    if kind == "C":
        a_rank = r
        a_ad_rank = r if not s1 else r - 1
    else:
        a_rank = max(r - 1, 0)
        # v-tilde lies in A(O) only when its support has even size
        a_ad_rank = a_rank if len(s1) % 2 == 1 or not s1 else max(r - 2, 0)
    return GroupData(vals, a_rank, a_ad_rank, s1, bool(s1))


def markable_parts(lam, kind):
    """Parts of the non-eps parity whose height has the kind parity.

    B: odd part, odd height; C: even part, even height; D: odd part, even
    height.  Returned as a multiplicity-free decreasing tuple.
    """
    out = []
    for v in distinct_eps_values(lam, kind):
        h = height(lam, v)
        if kind == "B" and h % 2 == 1 or kind in ("C", "D") and h % 2 == 0:
            out.append(v)
    return tuple(sorted(out, reverse=True))


def abar_rank(lam, kind):
    """log2 of Lusztig's canonical quotient: markable count, minus 1 for B/D."""
    m = len(markable_parts(lam, kind))
    return m if kind == "C" else max(m - 1, 0)


def kernel_subgroup(lam, kind):
    """The kernel N of A(O) ->> Abar(O).

    Generated by the products v_x v_m where m is the markable part in whose
    interval [m, next markable) the value x falls; below the last markable
    part the partner is the identity.
    """
    vals = distinct_eps_values(lam, kind)
    marks = markable_parts(lam, kind)
    gens = []
    for v in vals:
        partner = 0
        for m in marks:
            if m <= v:
                partner = m
                break
        g = frozenset({v}) ^ frozenset({partner} if partner else set())
        if g:
            gens.append(g)
    return span(gens)


def _row_pair(lam, i, j):
    """Product of the involutions of rows i, j (1-based; out-of-range rows
    contribute the identity, equal values cancel)."""
    s = frozenset()
    for k in (i, j):
        if 1 <= k <= len(lam):
            s ^= frozenset({lam[k - 1]})
    return s


def kernel_pairs(lam, kind):
    """The kernel N for an orbit carrying a distinguished marking, generated
    by products of consecutive rows: (2i, 2i+1) in type B, (2i-1, 2i) in C/D."""
    r = len(lam)
    gens = []
    if kind == "B":
        gens = [_row_pair(lam, 2 * i, 2 * i + 1) for i in range(1, (r + 1) // 2 + 1)]
    else:
        gens = [_row_pair(lam, 2 * i - 1, 2 * i) for i in range(1, r // 2 + 2)]
    return span(g for g in gens if g)


def theta_basis(lam, kind):
    """Row products splitting Abar(O): (2i-1, 2i+1) in B, (2i, 2i+2) in C/D."""
    r = len(lam)
    if kind == "B":
        return [_row_pair(lam, 2 * i - 1, 2 * i + 1) for i in range(1, (r - 1) // 2 + 1)]
    if kind == "C":
        return [_row_pair(lam, 2 * i, 2 * i + 2) for i in range(1, r // 2 + 1)]
    return [_row_pair(lam, 2 * i, 2 * i + 2) for i in range(1, r // 2)]


def theta_tilde_basis(lam, kind):
    """Alternative lifts of the Abar basis: (2i-1, 2i) in B, (2i, 2i+1) in C/D."""
    r = len(lam)
    if kind == "B":
        return [_row_pair(lam, 2 * i - 1, 2 * i) for i in range(1, (r - 1) // 2 + 1)]
    if kind == "C":
        return [_row_pair(lam, 2 * i, 2 * i + 1) for i in range(1, r // 2 + 1)]
    return [_row_pair(lam, 2 * i, 2 * i + 1) for i in range(1, r // 2)]


@dataclass(frozen=True)
class MarkedPartition:
    """A partition with a multiplicity-free set of parts marked.

    Marks are odd in types B/D and even in type C; types B and D require an
    even number of marks (type C pads with a formal zero when needed).
    """
    kind: str
    lam: tuple
    nu: tuple
    decoration: str = None

    def __post_init__(self):
        object.__setattr__(self, "lam", as_partition(self.lam))
        object.__setattr__(self, "nu", as_partition(self.nu))
        problem = marking_problem(self.kind, self.lam, self.nu, self.decoration)
        if problem:
            raise ValueError(problem)

    @property
    def eta(self):
        return multiset_difference(self.lam, self.nu)

    def __str__(self):
        return format_marked(self)


def multiset_difference(lam, nu):
    out = list(lam)
    for v in nu:
        out.remove(v)
    return tuple(out)


def marking_problem(kind, lam, nu, decoration=None):
    """Explain why (kind, lam, nu) is not a valid marked partition, or None."""
    if kind not in ("B", "C", "D"):
        return "marked partitions exist in types B, C, D"
    eps = EPSILON[kind]
    if any(nu.count(v) > 1 for v in set(nu)):
        return "marks must be multiplicity-free"
    if any(v % 2 == eps for v in nu):
        return "marks must be odd (B/D) or even (C)"
    for v in set(nu):
        if lam.count(v) < 1:
            return "mark %d is not a part" % v
    if kind in ("B", "D") and len(nu) % 2 == 1:
        return "types B and D need an even number of marks"
    if decoration is not None and not (kind == "D" and is_very_even(lam)):
        return "only very even type-D partitions carry decorations"
    return None


@dataclass(frozen=True)
class MarkedFlags:
    valid: bool
    reduced: bool = False
    special: bool = False
    distinguished: bool = False


def classify_marked(kind, lam, nu, decoration=None):
    """Validity, reducedness, specialness and distinguishedness of a marking."""
    lam, nu = as_partition(lam), as_partition(nu)
    if marking_problem(kind, lam, nu, decoration):
        return MarkedFlags(False)
    m = MarkedPartition(kind, lam, nu, decoration)
    return MarkedFlags(True, is_reduced(m), is_special_marked(m), is_distinguished_marked(m))


def is_reduced(m):
    return set(m.nu) <= set(markable_parts(m.lam, m.kind))


def is_special_marked(m):
    """No wrong-parity part x with ht_nu(x) odd and ht_lam(x) of the bad parity
    (odd for B, even for C and D)."""
    eps = EPSILON[m.kind]
    bad_lam_parity = 1 if m.kind == "B" else 0
    for x in set(v for v in m.lam if v % 2 == eps):
        hnu = sum(1 for v in m.nu if v >= x)
        if hnu % 2 == 1 and height(m.lam, x) % 2 == bad_lam_parity:
            return False
    return True


def is_distinguished_marked(m):
    """Marks and unmarked rows both multiplicity-free."""
    eta = m.eta
    return all(eta.count(v) <= 1 for v in set(eta))


def marking_element(nu):
    return frozenset(set(nu))


def all_markings(lam, kind):
    """Every admissible marking: subsets of the distinct non-eps values, with
    an even count in types B and D."""
    vals = distinct_eps_values(lam, kind)
    out = []
    for r in range(len(vals) + 1):
        if kind in ("B", "D") and r % 2 == 1:
            continue
        for c in combinations(vals, r):
            out.append(tuple(sorted(c, reverse=True)))
    return out


def equivalent_markings(m):
    """All markings of lam in the same Abar-class as m (the lift set)."""
    n = kernel_subgroup(m.lam, m.kind)
    target = marking_element(m.nu)
    return [nu for nu in all_markings(m.lam, m.kind)
            if (marking_element(nu) ^ target) in n]


def _gamma_norm4(nu, eta):
    """4 * |rho_plus(nu^ ∪ eta)|^2, for comparing markings of one partition."""
    total = 0
    for v in union(uparrow(nu) if nu else (), eta):
        total += sum(h * h for h in range(v - 1, 0, -2))
    return total


def canonical_split(m):
    """The minimal-weight marking (nu0, eta0) in the class of a distinguished
    marking: solve for the class in the theta basis and transport the solution
    through the theta-tilde lifts, taking the norm-minimal outcome when the
    theta images are dependent.
    """
    if not is_distinguished_marked(m):
        raise ValueError("requires distinguished datum")
    lam, kind = m.lam, m.kind
    thetas = theta_basis(lam, kind)
    tildes = theta_tilde_basis(lam, kind)
    n = kernel_pairs(lam, kind)
    target = marking_element(m.nu)
    best = None
    for bits in product((0, 1), repeat=len(thetas)):
        acc = frozenset()
        for b, t in zip(bits, thetas):
            if b:
                acc ^= t
        if (acc ^ target) not in n:
            continue
        c0 = frozenset()
        for b, t in zip(bits, tildes):
            if b:
                c0 ^= t
        nu0 = tuple(sorted(c0, reverse=True))
        eta0 = multiset_difference(lam, nu0)
        key = _gamma_norm4(nu0, eta0)
        if best is None or key < best[0]:
            best = (key, nu0, eta0)
    if best is None:
        raise ValueError("marking class not reachable from the theta basis")
    return best[1], best[2]


def parse_marked(text):
    """Parse "B:<[5,1]>[5,3,1]" (decoration suffix I/II allowed in type D)."""
    s = text.strip()
    if len(s) < 4 or s[1] != ":" or s[2] != "<":
        raise ValueError("marked partition text must look like B:<[5,1]>[5,3,1]")
    kind = s[0]
    close = s.index(">")
    nu = parse_partition(s[3:close])
    body = s[close + 1:]
    dec = None
    for suffix in ("II", "I"):
        if body.endswith(suffix):
            body, dec = body[: -len(suffix)], suffix
            break
    lam = parse_partition(body)
    return MarkedPartition(kind, lam, nu, dec)


def format_marked(m):
    return "%s:<%s>%s%s" % (m.kind, format_partition(m.nu),
                            format_partition(m.lam), m.decoration or "")


def orbit_of(m):
    return Orbit(m.kind, size(m.lam), m.lam, m.decoration)
