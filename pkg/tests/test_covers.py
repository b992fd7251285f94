from orbitduality.partitions import size
from orbitduality.orbits import LeviShape, parse_orbit
from orbitduality.compgroups import MarkedPartition, parse_marked, span
from orbitduality.sommers import sat_inverse, sat_la, sommers_dual
from orbitduality.covers import (
    abar_r_rank, d_map, gamma_group_rank, lusztig_cover, ms_lift,
    phi_data, rigidity, saturation_step_analysis, singular_rows,
)
from orbitduality.verify import iter_special


def test_lusztig_cover_and_rigidity():
    cov = lusztig_cover(parse_orbit("C:[2,2,2,1,1]"))
    assert cov.degree == 1
    flags = rigidity(cov.base, cov.subgroup)
    assert flags.no_codim2_leaves and flags.h2_zero and flags.birationally_rigid


def test_rigidity_h2_needs_support():
    # a repeated unconstrained value forces an element through it
    o = parse_orbit("D:[3,3]")
    trivial_cover = span([frozenset({3})])     # the whole group: trivial cover
    universal = {frozenset()}
    assert rigidity(o, trivial_cover).h2_zero
    assert not rigidity(o, universal).h2_zero


def test_rigidity_zero_orbit():
    o = parse_orbit("C:[1,1,1,1]")
    assert rigidity(o, {frozenset()}).birationally_rigid


def test_singular_rows():
    assert singular_rows((4, 2)) == (1, 2)
    assert singular_rows((2, 2, 2, 1, 1)) == ()


def test_phi_data():
    # two columns of length 1 removed from [4,2]: the created involution
    # falls onto the value below the cut
    kernel, mapping = phi_data((4, 2), "C", 1)
    assert mapping[4] == frozenset({2}) and mapping[2] == frozenset({2})
    assert kernel == span([frozenset({4, 2})])
    # bottom-row removal sends the involution to the identity
    kernel, mapping = phi_data((4, 2), "C", 2)
    assert mapping[2] == frozenset()
    assert frozenset({2}) in kernel


def test_d_map_witness():
    cover = d_map(parse_marked("B:<[5,1]>[5,4,4,3,1]"))
    assert cover.base == parse_orbit("C:[4,4,4,2,2]")
    assert cover.degree == 2 and not cover.exact_subgroup()


def test_d_map_distinguished_identity():
    cover = d_map(parse_marked("B:<[5,1]>[5,3,1]"))
    assert cover.base.parts == (2, 2, 2, 1, 1)
    assert cover.degree == 1 and cover.exact_subgroup()


def test_ms_lift_examples():
    lift = ms_lift(parse_marked("C:<[2]>[2,2]"))
    assert (lift.factor1.kind, lift.factor1.parts) == ("C", (2,))
    assert (lift.factor2.kind, lift.factor2.parts) == ("C", (2,))
    lift = ms_lift(parse_marked("B:<[5,1]>[5,4,4,3,1]"))
    assert (lift.factor1.kind, lift.factor1.parts) == ("D", (5, 4, 4, 3))
    assert (lift.factor2.kind, lift.factor2.parts) == ("B", (1,))


def test_rank_routes():
    m = parse_marked("B:<[5,1]>[5,3,1]")
    assert gamma_group_rank(m) == abar_r_rank(m) == 0
    witness = parse_marked("B:<[5,1]>[5,4,4,3,1]")
    assert gamma_group_rank(witness) == 1
    assert abar_r_rank(witness) == 0


def test_step_analysis():
    flags = saturation_step_analysis(4, parse_marked("B:<[5,1]>[5,3,1]"))
    assert not flags.abar_changes and not flags.bind_birational
    flags = saturation_step_analysis(5, parse_marked("B:<[5,1]>[5,3,1]"))
    assert not flags.abar_changes and flags.bind_birational
    core = MarkedPartition("D", (3, 1), ())
    flags = saturation_step_analysis(5, core)
    assert flags.abar_changes == (not flags.bind_birational)


def test_step_equivalence_on_special_data():
    for kind, n in (("B", 9), ("C", 8), ("D", 8)):
        for m in iter_special(kind, n):
            gl, cur = sat_inverse(m)
            for a in sorted(gl, reverse=True):
                flags = saturation_step_analysis(a, cur)
                assert flags.abar_changes != flags.bind_birational, (str(m), a)
                cur = sat_la(LeviShape((a,), size(cur.lam)), [(a,)], cur, kind=kind)


def test_d_map_subgroup_index_matches_degree():
    from orbitduality.compgroups import group_data
    for kind, n in (("B", 9), ("C", 8), ("D", 8)):
        for m in iter_special(kind, n):
            cover = d_map(m)
            if cover.subgroup is None:
                continue
            order = 2 ** group_data(cover.base).a_rank
            assert order // len(cover.subgroup) == cover.degree, str(m)


def test_rank_order_independence():
    from orbitduality.orbits import induce
    from orbitduality.compgroups import group_data

    def rank_with(m, reverse):
        gl, cur = sat_inverse(m)
        dual = sommers_dual(cur)
        total = group_data(dual).a_ad_rank
        for a in sorted(gl, reverse=reverse):
            step = induce(LeviShape((a,), dual.ambient), [(1,) * a], dual,
                          kind=dual.kind)
            total += 0 if step.birational else 1
            cur = sat_la(LeviShape((a,), size(cur.lam)), [(a,)], cur, kind=m.kind)
            dual = sommers_dual(cur)
        return total

    for kind, n in (("B", 9), ("C", 8), ("D", 8)):
        for m in iter_special(kind, n):
            assert rank_with(m, True) == rank_with(m, False)
