import itertools

import pytest

from orbitduality.partitions import (
    as_partition, collapse, dominates, drop_box, add_unit, bump_first,
    drop_column_box, decrement_all, enumerate_partitions, enumerate_type,
    format_partition, head, height, is_type, is_very_even, join,
    multiplicity, parse_partition, size, tail, transpose, union, uparrow,
    uparrow2,
)


def brute_collapse(p, kind):
    cands = [q for q in enumerate_type(kind, size(p)) if dominates(p, q)]
    best = [q for q in cands if all(dominates(q, r) for r in cands)]
    assert len(best) == 1
    return best[0]


def test_transpose_examples():
    assert transpose(()) == ()
    assert transpose((4, 2, 1)) == (3, 2, 1, 1)
    assert transpose((3, 1, 1)) == (3, 1, 1)


def test_combine_examples():
    assert union((4, 4, 3, 1, 1, 1), (5, 1)) == (5, 4, 4, 3, 1, 1, 1, 1)
    assert join((4, 4, 3, 1, 1, 1), (5, 1)) == (9, 5, 3, 1, 1, 1)
    p = (3, 2)
    assert union(p, ()) == p and join(p, ()) == p


def test_collapse_examples():
    assert collapse((4, 4, 3), "B") == (4, 4, 3)
    assert collapse((6, 3, 2), "B") == (5, 3, 3)
    assert collapse((3, 1), "C") == (2, 2)
    with pytest.raises(ValueError):
        collapse((6, 4), "B")


def test_collapse_against_brute_force_small():
    for n in range(11):
        for kind in ("B", "C", "D"):
            if (n % 2 == 1) != (kind == "B"):
                continue
            for p in enumerate_partitions(n):
                assert collapse(p, kind) == brute_collapse(p, kind)


def test_stats():
    assert (multiplicity((5, 3, 1), 3), height((5, 3, 1), 3)) == (1, 2)
    assert (multiplicity((5, 3, 1), 4), height((5, 3, 1), 4)) == (0, 1)
    assert (multiplicity((4, 2, 2), 2), height((4, 2, 2), 2)) == (2, 3)


def test_unit_transforms():
    assert drop_box((3, 1, 1)) == (3, 1)
    assert add_unit((3, 1)) == (3, 1, 1)
    assert bump_first((2, 2)) == (3, 2)
    assert bump_first(()) == (1,)
    assert drop_column_box((2, 2)) == (2, 1)
    assert decrement_all((3, 2, 1)) == (2, 1)
    assert head((5, 3, 1), 2) == (5, 3) and tail((5, 3, 1), 2) == (1,)
    assert uparrow((5, 3)) == (6, 2)
    assert uparrow((2,)) == (3,)
    assert uparrow2((2, 0)) == (3,)
    assert uparrow2((3, 3)) == (4, 2)
    with pytest.raises(ValueError):
        uparrow((5, 4))


def test_uparrow_preserves_size_even_length():
    for q1 in range(1, 10):
        for q2 in range(1, q1):
            if (q1 - q2) % 2 == 0:
                assert size(uparrow((q1, q2))) == q1 + q2


def test_dominance():
    assert dominates((6, 3, 2), (5, 3, 3))
    assert dominates((4, 2), (4, 2))
    assert not dominates((3, 3), (4, 2))
    with pytest.raises(ValueError):
        dominates((3,), (2,))


def test_dominance_partial_order():
    for n in range(9):
        ps = list(enumerate_partitions(n))
        for p in ps:
            assert dominates(p, p)
        for p, q in itertools.permutations(ps, 2):
            if dominates(p, q) and dominates(q, p):
                assert p == q
        for p, q, r in itertools.permutations(ps, 3):
            if dominates(p, q) and dominates(q, r):
                assert dominates(p, r)


def test_is_type():
    assert is_type((3, 1, 1), "B")
    assert not is_type((3, 1), "C")
    assert is_type((4, 4, 2, 2), "D") and is_very_even((4, 4, 2, 2))
    assert not is_very_even((3, 1))


def test_transpose_union_join_duality():
    for n in range(7):
        for m in range(7):
            for p in enumerate_partitions(n):
                for q in enumerate_partitions(m):
                    assert transpose(union(p, q)) == join(transpose(p), transpose(q))


def test_parse_format_roundtrip():
    for text in ("[]", "[5,3,1]", "[4,4,2,2]"):
        assert format_partition(parse_partition(text)) == text
    with pytest.raises(ValueError):
        parse_partition("[1,2]")
    with pytest.raises(ValueError):
        as_partition((2, -1))
