"""Nilpotent covers as subgroups of the component group: rigidity criteria,
the component-group maps along one-step column removals, the duality map on
marked data with its cover degree, and the two independent computations of
the Galois group of the maximal equivalent cover.
"""

from dataclasses import dataclass

from .partitions import EPSILON, is_very_even, size
from .orbits import LeviShape, Orbit, induce
from .compgroups import (
    a_group_elements,
    abar_rank,
    distinct_eps_values,
    group_data,
    kernel_subgroup,
)
from .sommers import sat_inverse, sat_la, sommers_dual
from .infchar import nu0_eta0


@dataclass(frozen=True)
class CoverSpec:
    """A cover of `base` given by a subgroup of A(base); `degree` is the index.

    `subgroup` is None when only the degree (not the subgroup itself) is
    known: transporting subgroups through a non-birational induction step is
    not part of this computation.
    """
    base: Orbit
    degree: int
    subgroup: frozenset = None

    def exact_subgroup(self):
        return self.subgroup is not None


@dataclass(frozen=True)
class RigidityFlags:
    no_codim2_leaves: bool
    h2_zero: bool

    @property
    def birationally_rigid(self):
        return self.no_codim2_leaves and self.h2_zero


def _gap_after(lam, i):
    nxt = lam[i + 1] if i + 1 < len(lam) else 0
    return lam[i] - nxt


def rigidity(orbit, subgroup):
    """Rigidity of the cover of `orbit` attached to `subgroup`.

    No codimension-2 leaves: every row gap is at most 2, gaps of 2 occur only
    at rows of the unconstrained parity, and for each such gap the subgroup
    misses the product of the two involutions straddling it.  Vanishing
    second cohomology: for every unconstrained value of multiplicity exactly
    2 the subgroup contains an element supported on it.
    """
    lam, eps = orbit.parts, EPSILON[orbit.kind]
    no_leaves = True
    for i in range(len(lam)):
        gap = _gap_after(lam, i)
        if gap > 2:
            no_leaves = False
            break
        if gap == 2:
            if lam[i] % 2 == eps:
                no_leaves = False
                break
            lower = lam[i] - 2
            forbidden = frozenset({lam[i], lower} if lower else {lam[i]})
            if forbidden in subgroup:
                no_leaves = False
                break
    h2 = True
    for v in distinct_eps_values(lam, orbit.kind):
        if lam.count(v) == 2:
            if not any(v in g for g in subgroup):
                h2 = False
                break
    return RigidityFlags(no_leaves, h2)


def lusztig_cover(orbit):
    """The cover attached to the kernel of A(O) ->> Abar(O)."""
    n = kernel_subgroup(orbit.parts, orbit.kind)
    return CoverSpec(orbit, 2 ** abar_rank(orbit.parts, orbit.kind), n)


# ---------------------------------------------------------------------------
# component-group maps along a single column-pair removal


def singular_rows(lam):
    """Row indices m (1-based) with lam_m - lam_{m+1} >= 2."""
    return tuple(i + 1 for i in range(len(lam)) if _gap_after(lam, i) >= 2)


def phi_data(lam, kind, m):
    """The map A(O_lam) -> A(O_lam0) for the removal of two columns of
    length m, where lam0 is lam with its first m rows shortened by 2.

    Values strictly above the cut shift down by 2 and values below persist;
    this matches the two component groups generator-for-generator except when
    row m has the unconstrained parity and the gap below it is exactly 2, in
    which case the removed value falls onto the value just below the cut (or
    onto the identity when nothing lies below).  Returns (kernel, mapping),
    the mapping sending each distinct value of lam^eps to the support of its
    image in A(O_lam0).
    """
    if m not in singular_rows(lam):
        raise ValueError("row %d is not singular in %s" % (m, lam))
    lam0 = tuple(v for v in sorted((x - 2 if i < m else x for i, x in enumerate(lam)),
                                   reverse=True) if v)
    vals = distinct_eps_values(lam, kind)
    v_cut = lam[m - 1]
    mapping = {}
    for v in vals:
        target = v - 2 if v >= v_cut else v
        mapping[v] = frozenset({target}) if target >= 1 else frozenset()
    vals0 = set(distinct_eps_values(lam0, kind))
    for v, img in mapping.items():
        if img and not img <= vals0:
            raise AssertionError("phi image %s not a generator of %s" % (set(img), lam0))
    kernel = frozenset(g for g in a_group_elements(Orbit(kind, size(lam), lam))
                       if not _apply_map(mapping, g))
    return kernel, mapping


def _apply_map(mapping, element):
    out = frozenset()
    for v in element:
        out ^= mapping.get(v, frozenset())
    return out


# ---------------------------------------------------------------------------
# the duality map on marked data


def d_map(m):
    """Dual cover of a reduced marked datum: the Lusztig cover of the core's
    dual, birationally induced up the stripped gl factors.

    The base and the degree are always computed: the degree is the core
    quotient order doubled once per non-birational induction step.  The
    subgroup itself is reported only when every step is birational.
    """
    gl, core = sat_inverse(m)
    core_dual = sommers_dual(core, route="general")
    degree = 2 ** abar_rank(core_dual.parts, core_dual.kind)
    subgroup = kernel_subgroup(core_dual.parts, core_dual.kind)
    cur = core
    cur_dual = core_dual
    exact = True
    for a in sorted(gl, reverse=True):
        nxt = sat_la(LeviShape((a,), size(cur.lam)), [(a,)], cur, kind=m.kind)
        step = induce(LeviShape((a,), cur_dual.ambient), [(1,) * a], cur_dual,
                      kind=cur_dual.kind)
        nxt_dual = sommers_dual(nxt, route="general")
        if step.orbit.parts != nxt_dual.parts:
            raise AssertionError("induction/duality mismatch at gl(%d)" % a)
        if not step.birational:
            degree *= 2
            exact = False
        elif step.collapsed:
            exact = False  # birational type-D collapse: degree 1, map not tracked
        elif exact:
            subgroup = _transport_subgroup(cur_dual, nxt_dual, a, subgroup)
        cur, cur_dual = nxt, nxt_dual
    return CoverSpec(cur_dual, degree, subgroup if exact else None)


def _transport_subgroup(small, big, a, subgroup):
    """Pull a subgroup of A(small) back along the birational addition of two
    columns of length a (so big = small + two columns, no collapse)."""
    kernel, mapping = phi_data(big.parts, big.kind, a)
    return frozenset(g for g in a_group_elements(big)
                     if _apply_map(mapping, g) in subgroup)


# ---------------------------------------------------------------------------
# the two Galois-group computations


@dataclass(frozen=True)
class MSLift:
    """The pseudo-Levi pair attached to a marked datum: two classical factors
    with one orbit each."""
    factor1: Orbit
    factor2: Orbit


def _factor_kinds(kind):
    if kind == "C":
        return "C", "C"
    return "D", "B" if kind == "B" else "D"


def ms_lift(m):
    """Sat-route of the pseudo-Levi pair: the minimal split of the core with
    one row pair per stripped gl factor, routed by parity."""
    nu0, eta0 = nu0_eta0(m)
    k1, k2 = _factor_kinds(m.kind)
    return MSLift(Orbit(k1, size(nu0), nu0), Orbit(k2, size(eta0), eta0))


def gamma_group_rank(m):
    """log2 of the Galois group of the maximal equivalent cover over the dual
    orbit: the adjoint component-group rank of the core's dual plus one per
    non-birational induction step."""
    gl, core = sat_inverse(m)
    cur = core
    cur_dual = sommers_dual(core, route="general")
    total = group_data(cur_dual).a_ad_rank
    for a in sorted(gl, reverse=True):
        nxt = sat_la(LeviShape((a,), size(cur.lam)), [(a,)], cur, kind=m.kind)
        step = induce(LeviShape((a,), cur_dual.ambient), [(1,) * a], cur_dual,
                      kind=cur_dual.kind)
        if not step.birational:
            total += 1
        cur = nxt
        cur_dual = sommers_dual(nxt, route="general")
    return total


def abar_r_rank(m):
    """log2 of Abar of the pseudo-Levi pair orbit (sum over the two factors)."""
    lift = ms_lift(m)
    total = 0
    for f in (lift.factor1, lift.factor2):
        if f.ambient:
            total += abar_rank(f.parts, f.kind)
    return total


@dataclass(frozen=True)
class StepFlags:
    abar_changes: bool
    bind_birational: bool


def saturation_step_analysis(a, cur):
    """Effect of saturating the datum `cur` by one gl(a) with principal orbit.

    `abar_changes`: the pseudo-Levi pair component group gains a factor of
    order 2.  `bind_birational`: the dual-side induction step is birational.
    """
    lam = cur.lam
    nu0, eta0 = nu0_eta0(cur)
    kind = cur.kind
    mark_parity = 1 if kind in ("B", "D") else 0
    eta_ht = sum(1 for v in eta0 if v >= a)
    nu_ht = sum(1 for v in nu0 if v >= a)
    eta_cond = eta_ht % 2 == (1 if kind == "B" else 0)
    fresh = a not in lam
    abar_changes = (fresh and a % 2 == mark_parity and eta_cond
                    and (kind != "D" or bool(eta0)))
    if a % 2 == mark_parity:
        blocked = kind == "D" and (not lam or is_very_even(lam))
        non_birational = fresh and eta_cond and not blocked
    else:
        non_birational = fresh and nu_ht % 2 == 1
    return StepFlags(abar_changes, not non_birational)
