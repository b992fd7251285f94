"""Exhaustive desk-scale verification suites.

Every suite enumerates a finite family of orbits or marked data, checks an
exact identity on each member, and returns a report dictionary with the
counts and any failures.  The default ranges match the headline claims:
groups up to so(11) / sp(10) / so(10) for the weight theorems and up to
so(13) / sp(12) / so(12) for the duality identities.
"""

import itertools
from concurrent.futures import ProcessPoolExecutor

from .partitions import (
    collapse,
    dominates,
    enumerate_partitions,
    enumerate_type,
    size,
    uparrow2,
)
from .orbits import LeviShape, Orbit, bvls_dual, enumerate_orbits
from .compgroups import (
    MarkedPartition,
    abar_rank,
    group_data,
    is_distinguished_marked,
    is_special_marked,
    kernel_subgroup,
    markable_parts,
)
from .sommers import sat_inverse, sat_la, sommers_dual
from .infchar import canonical, gamma_la, gamma_rigid_cover, rho_plus
from .covers import (
    abar_r_rank,
    d_map,
    gamma_group_rank,
    lusztig_cover,
    ms_lift,
    rigidity,
    saturation_step_analysis,
)
from .oracle import richardson_pair, verify_min
from . import exceptional


def weight_sizes(max_rank=5):
    return [("B", [2 * r + 1 for r in range(1, max_rank + 1)]),
            ("C", [2 * r for r in range(1, max_rank + 1)]),
            ("D", [2 * r for r in range(2, max_rank + 1)])]


def duality_sizes(max_rank=6):
    return [("B", [2 * r + 1 for r in range(1, max_rank + 1)]),
            ("C", [2 * r for r in range(1, max_rank + 1)]),
            ("D", [2 * r for r in range(2, max_rank + 1)])]


def iter_reduced_marked(kind, n):
    """All reduced marked partitions of one type and size (one per class)."""
    for lam in enumerate_type(kind, n):
        marks = markable_parts(lam, kind)
        for r in range(len(marks) + 1):
            if kind in ("B", "D") and r % 2 == 1:
                continue
            for nu in itertools.combinations(marks, r):
                yield MarkedPartition(kind, lam, tuple(sorted(nu, reverse=True)))


def iter_special(kind, n):
    for m in iter_reduced_marked(kind, n):
        if is_special_marked(m):
            yield m


def iter_special_distinguished(kind, n):
    for m in iter_special(kind, n):
        if is_distinguished_marked(m):
            yield m


def _report(name, checked, failures):
    return {"name": name, "checked": checked,
            "failures": failures, "passed": not failures}


def _certify(m):
    cert = verify_min(m)
    return str(m), cert.passed, str(cert.candidate), cert.shell_size


def verify_minimality(max_rank=5, jobs=None):
    """The candidate weight of every special distinguished marked datum is
    the unique minimal member of its admissible set (exhaustive shell)."""
    data = [m for kind, sizes in weight_sizes(max_rank)
            for n in sizes for m in iter_special_distinguished(kind, n)]
    failures = []
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_certify, data, chunksize=4))
    else:
        results = [_certify(m) for m in data]
    for name, passed, cand, shell in results:
        if not passed:
            failures.append((name, cand, shell))
    return _report("minimality", len(data), failures)


def verify_gamma(max_rank=5):
    """The datum weight equals the cover weight of its dual orbit, for every
    special distinguished datum."""
    failures = []
    checked = 0
    for kind, sizes in weight_sizes(max_rank):
        for n in sizes:
            for m in iter_special_distinguished(kind, n):
                checked += 1
                lhs = canonical(gamma_la(m))
                rhs = canonical(gamma_rigid_cover(sommers_dual(m)))
                if lhs != rhs:
                    failures.append((str(m), str(lhs[0]), str(rhs[0])))
    return _report("gamma consistency", checked, failures)


def verify_duality(max_rank=6):
    """Duality identities: the orbit duality cubes to itself and reverses the
    dominance order; the unmarked dual agrees with it; the three routes of
    the marked duality agree; the marked duality is injective on special
    distinguished data."""
    failures = []
    checked = 0
    for kind, sizes in duality_sizes(max_rank):
        for n in sizes:
            orbs = enumerate_orbits(kind, n)
            for o in orbs:
                checked += 1
                d1 = bvls_dual(o)
                if bvls_dual(bvls_dual(d1)) != d1:
                    failures.append(("d^3", str(o)))
            for a, b in itertools.combinations(orbs, 2):
                if a.parts == b.parts:
                    continue
                try:
                    forward = dominates(a.parts, b.parts)
                except ValueError:
                    continue
                if forward:
                    if not dominates(bvls_dual(b).parts, bvls_dual(a).parts):
                        failures.append(("order", str(a), str(b)))
                elif dominates(b.parts, a.parts):
                    if not dominates(bvls_dual(a).parts, bvls_dual(b).parts):
                        failures.append(("order", str(b), str(a)))
            seen = {}
            for m in iter_reduced_marked(kind, n):
                checked += 1
                general = sommers_dual(m, "general")
                if sommers_dual(m, "blocks") != general:
                    failures.append(("blocks route", str(m)))
                if not m.nu:
                    if bvls_dual(Orbit(kind, n, m.lam)).parts != general.parts:
                        failures.append(("unmarked = orbit dual", str(m)))
                if is_distinguished_marked(m):
                    if sommers_dual(m, "distinguished") != general:
                        failures.append(("distinguished route", str(m)))
                    if is_special_marked(m):
                        key = general.parts
                        if key in seen:
                            failures.append(("injectivity", str(m), seen[key]))
                        seen[key] = str(m)
    return _report("duality identities", checked, failures)


def verify_rigidity(max_rank=5):
    """The quotient cover of the dual of every special distinguished datum is
    birationally rigid."""
    failures = []
    checked = 0
    for kind, sizes in weight_sizes(max_rank):
        for n in sizes:
            for m in iter_special_distinguished(kind, n):
                checked += 1
                cov = lusztig_cover(sommers_dual(m))
                flags = rigidity(cov.base, cov.subgroup)
                if not flags.birationally_rigid:
                    failures.append((str(m), str(cov.base), str(flags)))
    return _report("rigidity", checked, failures)


def verify_gamma_group(max_rank=5, kinds=("B", "C", "D")):
    """On special data the two Galois-group computations agree rank for rank,
    the per-step criteria are equivalent, and for unmarked data the dual
    cover degree is the canonical-quotient order."""
    failures = []
    checked = 0
    sizes_by_kind = dict(weight_sizes(max_rank))
    for kind in kinds:
        for n in sizes_by_kind[kind]:
            for m in iter_special(kind, n):
                checked += 1
                r1, r2 = gamma_group_rank(m), abar_r_rank(m)
                if r1 != r2:
                    failures.append(("ranks", str(m), r1, r2))
                gl, cur = sat_inverse(m)
                for a in sorted(gl, reverse=True):
                    flags = saturation_step_analysis(a, cur)
                    if flags.abar_changes == flags.bind_birational:
                        failures.append(("step", str(m), a, str(cur)))
                    cur = sat_la(LeviShape((a,), size(cur.lam)), [(a,)], cur, kind=kind)
                if not m.nu:
                    degree = d_map(m).degree
                    if degree != 2 ** abar_rank(m.lam, kind):
                        failures.append(("galois degree", str(m), degree))
    return _report("galois group ranks", checked, failures)


def verify_richardson(max_rank=5):
    """The orbit pair from the weight coordinates equals the saturation-route
    pair for every special datum, and fails on the non-special witness in the
    documented direction."""
    failures = []
    checked = 0
    for kind, sizes in weight_sizes(max_rank):
        for n in sizes:
            for m in iter_special(kind, n):
                checked += 1
                lift = ms_lift(m)
                first, second = richardson_pair(m)
                if (first.parts, second.parts) != (lift.factor1.parts, lift.factor2.parts):
                    failures.append((str(m), str(first), str(lift.factor1)))
    witness = MarkedPartition("B", (5, 4, 4, 3, 1), (5, 1))
    first, _ = richardson_pair(witness)
    lift = ms_lift(witness)
    checked += 1
    if first.parts != (5, 5, 3, 3) or lift.factor1.parts != (5, 4, 4, 3):
        failures.append(("witness", str(first), str(lift.factor1)))
    return _report("richardson vs saturation", checked, failures)


def verify_point_values():
    """Source point values: the non-special witness weight and cover degree,
    the exceptional tables, the rank-2/4 subsystem classifications, and the
    lattice-shell minimality of the rank-2/4 table weights."""
    failures = []
    checked = 0
    witness = MarkedPartition("B", (5, 4, 4, 3, 1), (5, 1))
    checked += 1
    if str(gamma_la(witness)) != "(5/2,3/2,3/2,3/2,1/2,1/2,1/2,1/2)":
        failures.append(("witness weight", str(gamma_la(witness))))
    cover = d_map(witness)
    checked += 1
    if cover.degree != 2 or cover.base.parts != (4, 4, 4, 2, 2):
        failures.append(("witness cover", cover.degree, str(cover.base)))
    for group in exceptional.GROUPS:
        rep = exceptional.verify_tables(group)
        checked += sum(rep["checked"].values())
        failures.extend(("tables " + group,) + tuple(f) for f in rep["failures"])
    for group in ("G2", "F4"):
        rep = exceptional.verify_classification(group)
        checked += rep["checked"]
        failures.extend(("classification " + group,) + tuple(f) for f in rep["failures"])
        rep = exceptional.verify_shell_minimality(group)
        checked += rep["checked"]
        failures.extend(("shell " + group,) + tuple(map(str, f)) for f in rep["failures"])
    return _report("point values and tables", checked, failures)


def verify_kernel(max_size=14, max_rank=6, norm_top=12):
    """Combinatorial kernel: the greedy collapse equals the brute-force
    dominance maximum; the component-group orders match the markable count;
    the two-row staggering strictly increases the weight norm."""
    failures = []
    checked = 0
    for n in range(max_size + 1):
        for kind in ("B", "C", "D"):
            if (n % 2 == 1) != (kind == "B"):
                continue
            typed = list(enumerate_type(kind, n))
            for p in enumerate_partitions(n):
                checked += 1
                dominated = [q for q in typed if dominates(p, q)]
                best = [q for q in dominated if all(dominates(q, r) for r in dominated)]
                if len(best) != 1 or collapse(p, kind) != best[0]:
                    failures.append(("collapse", kind, p))
    for kind, sizes in duality_sizes(max_rank):
        for n in sizes:
            for lam in enumerate_type(kind, n):
                checked += 1
                o = Orbit(kind, n, lam)
                quotient = 2 ** group_data(o).a_rank // len(kernel_subgroup(lam, kind))
                if quotient != 2 ** abar_rank(lam, kind):
                    failures.append(("quotient order", kind, lam))
    for q1 in range(1, norm_top + 1):
        for q2 in range(1, q1 + 1):
            checked += 1
            a = rho_plus((q1, q2), (q1 + q2) // 2)
            b = rho_plus(uparrow2((q1, q2)), (q1 + q2) // 2)
            if not sum(h * h for h in a) < sum(h * h for h in b):
                failures.append(("two-row norm", q1, q2))
    return _report("combinatorial kernel", checked, failures)


ALL_SUITES = [
    ("minimality", verify_minimality),
    ("gamma", verify_gamma),
    ("duality", verify_duality),
    ("rigidity", verify_rigidity),
    ("gamma-group", verify_gamma_group),
    ("richardson", verify_richardson),
    ("tables", verify_point_values),
    ("kernel", verify_kernel),
]


def verify_all(max_rank=5, jobs=None):
    reports = []
    for name, fn in ALL_SUITES:
        if name == "minimality":
            reports.append(fn(max_rank=max_rank, jobs=jobs))
        elif name in ("duality", "kernel", "tables"):
            reports.append(fn())
        else:
            reports.append(fn(max_rank=max_rank))
    return reports
