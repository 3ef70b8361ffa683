import pytest

from qpairs.algebra import ZZ_z, CyclotomicRing, eval_at_root_of_unity, specialize_z_at_one
from qpairs.partitions import (
    CrankTable,
    Partition,
    PartitionPair,
    crank_mod_counts,
    crank_table_enum,
    crankform_terms,
    enumerate_st_pairs,
    paircrank,
    smallest_part_occurrences,
    st_count,
    st_series,
    st_series_z_crankform,
    st_series_z_def,
    st_series_z_lambert,
)

from .oracles import PRINTED_ST5, crank_counts_brute, st_pairs_brute


@pytest.fixture(scope="module")
def table22():
    return crank_table_enum(22)


def test_partition_invariants():
    p = Partition((1, 1, 3))
    assert (p.size, p.count, p.smallest, p.largest) == (5, 3, 1, 3)
    e = Partition()
    assert e.smallest == float("inf") and e.largest == 0
    with pytest.raises(ValueError):
        Partition((3, 1))
    with pytest.raises(ValueError):
        Partition((0, 2))


def test_st_membership():
    assert PartitionPair.of((2,), (3,)).is_st()
    assert not PartitionPair.of((2,), (4,)).is_st()  # 4 >= 2*2
    assert not PartitionPair.of((2,), (1,)).is_st()  # s(pi2) < s(pi1)
    assert not PartitionPair.of((), (1,)).is_st()


def test_enumerate_examples():
    assert enumerate_st_pairs(0) == []
    assert {(p.pi1.parts, p.pi2.parts) for p in enumerate_st_pairs(2)} == {((2,), ()), ((1, 1), ()), ((1,), (1,))}
    five = [(p.pi1.parts, p.pi2.parts) for p in enumerate_st_pairs(5)]
    assert len(five) == 15 and sorted(five) == sorted(PRINTED_ST5)
    assert five == sorted(five)  # deterministic lexicographic order


def test_enumerate_against_brute():
    for n in range(12):
        got = sorted((p.pi1.parts, p.pi2.parts) for p in enumerate_st_pairs(n))
        assert got == sorted(st_pairs_brute(n))


def test_st_count_examples():
    assert st_count(5) == 15 and st_count(0) == 0
    assert st_count(8) % 3 == 0


def test_paircrank_examples():
    assert paircrank(PartitionPair.of((5,))) == 0
    assert paircrank(PartitionPair.of((1, 3), (1,))) == 0
    assert paircrank(PartitionPair.of((2,), (3,))) == -1
    with pytest.raises(ValueError):
        paircrank(PartitionPair.of((2,), (4,)))


def test_crank_table_against_brute(table22):
    for n in range(0, 11):
        assert table22.column(n) == crank_counts_brute(n)
    assert sum(table22.column(5).values()) == 15
    assert table22.column(0) == {}


def test_crank_table_invariants(table22):
    for n in range(23):
        col = table22.column(n)
        assert sum(col.values()) == st_count(n)
        assert all(col.get(-m, 0) == c for m, c in col.items())
        for t in (3, 5):
            assert sum(crank_mod_counts(table22, t, n)) == st_count(n)


def test_crank_mod_counts_examples(table22):
    assert sum(crank_mod_counts(table22, 3, 5)) == 15
    assert len(set(crank_mod_counts(table22, 3, 8))) == 1
    assert len(set(crank_mod_counts(table22, 5, 13))) == 1
    with pytest.raises(ValueError):
        table22.column(23)


def test_st_series_examples():
    s = st_series(25)
    assert s[5] == 15 and s[0] == 0
    assert [s[n] for n in range(1, 26)] == [st_count(n) for n in range(1, 26)]


def test_series_z_three_way():
    a, b, c = st_series_z_def(40), st_series_z_lambert(40), st_series_z_crankform(40)
    assert a == b == c


def test_series_z_examples(table22):
    s = st_series_z_def(12)
    assert specialize_z_at_one(s) == st_series(12)
    assert s[1] == ZZ_z.one
    assert s[5][-1] == table22.column(5).get(-1, 0)
    assert specialize_z_at_one(st_series_z_lambert(10))[5] == 15


def test_series_z_at_cube_root(table22):
    R = CyclotomicRing(3)
    z = R.zeta()
    want = R.zero
    for m, c in table22.column(5).items():
        want = want + c * z ** (m % 3)
    assert eval_at_root_of_unity(st_series_z_def(6), 3)[5] == want


def test_crankform_table_equals_enumeration(table22):
    assert CrankTable.from_series(st_series_z_crankform(22), 22) == table22


def test_crankform_first_term_counts_parts():
    first, _ = crankform_terms(12)
    for n in range(1, 13):
        by_parts: dict = {}
        for p in enumerate_st_pairs(n):
            if not p.pi2.count:
                by_parts[p.pi1.count - 1] = by_parts.get(p.pi1.count - 1, 0) + 1
        assert first[n].to_dict() == by_parts


def test_smallest_part_reading():
    # bounding pi2 by 2s(pi1) reproduces sT(n); bounding by 2s(pi2) does not
    assert [smallest_part_occurrences(n, "pi1") for n in range(1, 10)] == [st_count(n) for n in range(1, 10)]
    assert any(smallest_part_occurrences(n, "pi2") != st_count(n) for n in range(1, 10))
