import pytest

from orbitduality.partitions import EPSILON, enumerate_type
from orbitduality.orbits import Orbit, parse_orbit
from orbitduality.compgroups import (
    MarkedFlags, MarkedPartition, abar_rank, all_markings, a_group_elements,
    canonical_split, classify_marked, equivalent_markings, format_marked,
    group_data, is_distinguished_marked, kernel_pairs, kernel_subgroup,
    markable_parts, marking_element, multiset_difference, parse_marked, span,
    theta_basis, theta_tilde_basis,
)


def test_group_data_examples():
    gd = group_data(parse_orbit("C:[4,2,2]"))
    assert gd.eps_values == (4, 2) and gd.a_rank == 2 and gd.a_ad_rank == 1
    assert gd.upsilon_tilde == frozenset({4}) and gd.s1_nonempty
    gd = group_data(Orbit("B", 7, (7,)))
    assert gd.a_rank == 0
    gd = group_data(parse_orbit("C:[6,4,2]"))
    assert gd.a_rank == 3 and gd.a_ad_rank == 2


def test_markable_and_rank():
    assert markable_parts((5, 3, 1), "B") == (5, 1)
    assert abar_rank((5, 3, 1), "B") == 1
    assert markable_parts((6, 4, 2), "C") == (4,)
    assert abar_rank((6, 4, 2), "C") == 1
    assert markable_parts((4, 2, 2), "C") == ()
    assert abar_rank((4, 2, 2), "C") == 0


def test_kernel_examples():
    n = kernel_subgroup((6, 4, 2), "C")
    assert n == span([frozenset({6, 4}), frozenset({2})])
    n = kernel_subgroup((5, 3, 1), "B")
    assert n == span([frozenset({3, 1})])
    assert kernel_subgroup((5, 1), "D") == span([frozenset({5, 1})])


def test_kernel_quotient_order():
    for kind, sizes in (("B", (3, 5, 7, 9)), ("C", (2, 4, 6, 8)), ("D", (4, 6, 8))):
        for n in sizes:
            for lam in enumerate_type(kind, n):
                order = 2 ** group_data(Orbit(kind, n, lam)).a_rank
                assert order // len(kernel_subgroup(lam, kind)) == 2 ** abar_rank(lam, kind)


def test_kernel_pairs_agree_on_distinguished_support():
    for kind, sizes in (("B", (3, 5, 7, 9)), ("C", (2, 4, 6, 8)), ("D", (4, 6, 8))):
        for n in sizes:
            for lam in enumerate_type(kind, n):
                if any(v % 2 == EPSILON[kind] for v in lam):
                    continue
                if any(lam.count(v) > 2 for v in set(lam)):
                    continue
                if not all(v in markable_parts(lam, kind)
                           for v in set(lam) if lam.count(v) == 2):
                    continue
                assert kernel_pairs(lam, kind) == kernel_subgroup(lam, kind), (kind, lam)


def test_classify_marked():
    assert classify_marked("B", (5, 3, 1), (5, 1)) == MarkedFlags(True, True, True, True)
    flags = classify_marked("B", (5, 4, 4, 3, 1), (5, 1))
    assert flags.valid and flags.reduced and not flags.special and not flags.distinguished
    assert classify_marked("B", (5, 3, 1), (5, 3)).special  # unmarked wrong-parity parts absent
    assert not classify_marked("B", (5, 3, 1), (5, 2)).valid
    assert not classify_marked("B", (5, 3, 1), (5,)).valid
    assert classify_marked("C", (2, 2), ()).special


def test_canonical_split_examples():
    assert canonical_split(parse_marked("B:<[5,1]>[5,3,1]")) == ((5, 3), (1,))
    assert canonical_split(MarkedPartition("C", (2, 2), (2,))) == ((2,), (2,))
    assert canonical_split(MarkedPartition("B", (5, 3, 1), ())) == ((), (5, 3, 1))
    nu0, eta0 = canonical_split(MarkedPartition("C", (6, 4, 2), (4,)))
    assert (nu0, eta0) == ((4, 2), (6,))
    with pytest.raises(ValueError):
        canonical_split(parse_marked("B:<[5,1]>[5,4,4,3,1]"))


def test_canonical_split_shapes():
    # marked side multiplicity-free, both sides of the unconstrained parity,
    # unmarked side never empty; on multiplicity-free lam both sides are too
    for kind, sizes in (("B", (5, 7, 9)), ("C", (4, 6, 8)), ("D", (4, 6, 8))):
        for n in sizes:
            for lam in enumerate_type(kind, n):
                for nu in all_markings(lam, kind):
                    m = MarkedPartition(kind, lam, nu)
                    if not is_distinguished_marked(m):
                        continue
                    nu0, eta0 = canonical_split(m)
                    assert len(set(nu0)) == len(nu0)
                    assert max(eta0.count(v) for v in set(eta0)) <= 2
                    if len(set(lam)) == len(lam):
                        assert len(set(eta0)) == len(eta0)
                    assert eta0, (kind, lam, nu)
                    eps = EPSILON[kind]
                    assert all(v % 2 != eps for v in nu0 + eta0)


def test_lifts():
    m = parse_marked("B:<[5,1]>[5,3,1]")
    lifts = equivalent_markings(m)
    assert (5, 1) in lifts and (5, 3) in lifts and len(lifts) == 2
    m0 = MarkedPartition("B", (5, 3, 1), ())
    assert set(equivalent_markings(m0)) == {(), (3, 1)}
    # complementary marking shows up in type C
    m2 = MarkedPartition("C", (2, 2), (2,))
    assert equivalent_markings(m2) == [(2,)]


def test_lift_classes_partition_markings():
    for kind, sizes in (("B", (5, 7)), ("C", (4, 6)), ("D", (4, 6))):
        for n in sizes:
            for lam in enumerate_type(kind, n):
                nmarks = all_markings(lam, kind)
                kernel = kernel_subgroup(lam, kind)
                classes = {}
                for nu in nmarks:
                    key = frozenset(marking_element(nu) ^ g for g in kernel)
                    classes.setdefault(key, []).append(nu)
                assert len({len(v) for v in classes.values()}) == 1


def test_theta_bases_span():
    lam = (5, 3, 1)
    assert theta_basis(lam, "B") == [frozenset({5, 1})]
    assert theta_tilde_basis(lam, "B") == [frozenset({5, 3})]
    lam = (6, 4, 2)
    assert theta_basis(lam, "C") == [frozenset({4})]
    assert theta_tilde_basis(lam, "C") == [frozenset({4, 2})]


def test_marked_text_roundtrip():
    for text in ("B:<[5,1]>[5,3,1]", "C:<[2]>[2,2]", "B:<[]>[3,1,1]"):
        assert format_marked(parse_marked(text)) == text


def test_multiset_difference():
    assert multiset_difference((5, 4, 4, 3, 1), (5, 1)) == (4, 4, 3)


def test_a_group_elements():
    o = parse_orbit("C:[6,4,2]")
    assert len(a_group_elements(o)) == 8
    o = parse_orbit("B:[5,3,1]")
    assert len(a_group_elements(o)) == 4
