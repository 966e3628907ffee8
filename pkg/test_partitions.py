"""
파티션 코어 테스트
정규형, 전체 열거, 클래스 판정/열거/개수를 확인합니다.
"""

import pytest

from pedverify.config import VerifyConfig
from pedverify.errors import InvalidPartitionError, WeightBoundError
from pedverify.partitions import (
    Partition,
    PartitionClass,
    count_class,
    count_four_regular_gt1,
    count_table,
    enumerate_all,
    enumerate_class,
    is_member,
    make_partition,
)

P = make_partition


def parts_of(partitions):
    return [partition.parts for partition in partitions]


def test_make_partition_sorts_and_weighs():
    partition = P([1, 3, 2])
    assert partition.parts == (3, 2, 1)
    assert partition.weight == 6
    assert P([]).parts == () and P([]).weight == 0
    assert P([5, 5]).weight == 10


@pytest.mark.parametrize("bad", [[0], [3, -1], [2, 0, 1]])
def test_make_partition_rejects_nonpositive(bad):
    with pytest.raises(InvalidPartitionError):
        P(bad)


def test_validated_partition_rejects_noncanonical():
    with pytest.raises(ValueError):
        Partition(parts=(1, 3), weight=4)
    with pytest.raises(ValueError):
        Partition(parts=(3, 1), weight=5)


def test_partition_helpers():
    partition = P([5, 2, 1])
    assert partition.largest == 5
    assert partition.second == 2
    assert partition.head_gap == 3
    assert P([3]).second == 0
    assert P([3]).head_gap == 3
    assert str(partition) == "5,2,1"
    assert str(P([])) == "()"


def test_enumerate_all_small():
    assert parts_of(enumerate_all(0)) == [()]
    assert parts_of(enumerate_all(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (4, 5), (10, 42), (20, 627)])
def test_enumerate_all_counts(n, expected):
    assert sum(1 for _ in enumerate_all(n)) == expected


def test_enumerate_all_is_distinct_and_lexicographically_decreasing():
    partitions = parts_of(enumerate_all(12))
    assert len(set(partitions)) == len(partitions)
    assert partitions == sorted(partitions, reverse=True)
    assert all(sum(parts) == 12 for parts in partitions)


def test_is_member_examples():
    assert is_member(P([3, 2, 1]), PartitionClass.DE1)
    assert not is_member(P([2, 2, 1]), PartitionClass.PED)
    assert is_member(P([3, 1, 1]), PartitionClass.DE3)
    assert not is_member(P([1, 1, 1]), PartitionClass.DE3)
    assert is_member(P([1, 1, 1]), PartitionClass.DE2)
    assert not is_member(P([4, 1]), PartitionClass.FOUR_REGULAR)
    assert is_member(P([6, 3, 2]), PartitionClass.PED_GT1)
    assert not is_member(P([6, 3, 1]), PartitionClass.PED_GT1)


def test_empty_partition_membership():
    empty = P([])
    for cls in (PartitionClass.PED, PartitionClass.FOUR_REGULAR, PartitionClass.PED_GT1):
        assert is_member(empty, cls)
    for cls in (PartitionClass.DE1, PartitionClass.DE2, PartitionClass.DE3):
        assert not is_member(empty, cls)


def test_enumerate_class_examples():
    assert parts_of(enumerate_class(3, PartitionClass.DE1)) == [(3,), (1, 1, 1)]
    assert parts_of(enumerate_class(5, PartitionClass.DE3)) == [(5,), (3, 2), (3, 1, 1)]
    assert parts_of(enumerate_class(0, PartitionClass.DE2)) == []
    assert parts_of(enumerate_class(6, PartitionClass.DE2)) == [(3, 3), (1, 1, 1, 1, 1, 1)]
    assert parts_of(enumerate_class(6, PartitionClass.PED_GT1)) == [(6,), (4, 2), (3, 3)]


@pytest.mark.parametrize("cls", list(PartitionClass))
def test_enumerate_class_equals_filtered_enumerate_all(cls):
    for n in range(0, 21):
        filtered = [partition for partition in enumerate_all(n) if is_member(partition, cls)]
        assert list(enumerate_class(n, cls)) == filtered, (cls, n)


def test_count_class_examples():
    assert count_class(5, PartitionClass.PED) == 6
    assert count_class(5, PartitionClass.FOUR_REGULAR) == 6
    assert count_class(6, PartitionClass.DE2) == 2
    assert count_table(5, PartitionClass.DE1) == [0, 1, 1, 2, 2, 4]
    assert count_table(5, PartitionClass.DE3) == [0, 1, 0, 1, 1, 3]
    assert count_table(0, PartitionClass.PED) == [1]


def test_ped_equals_four_regular_up_to_50():
    for n in range(51):
        assert count_class(n, PartitionClass.PED) == count_class(n, PartitionClass.FOUR_REGULAR), n


def test_de1_splits_by_largest_part_multiplicity():
    for n in range(1, 41):
        de1 = count_class(n, PartitionClass.DE1)
        assert de1 == count_class(n, PartitionClass.DE2) + count_class(n, PartitionClass.DE3), n


def test_ped_gt1_is_ped_difference():
    for n in range(1, 41):
        expected = count_class(n, PartitionClass.PED) - count_class(n - 1, PartitionClass.PED)
        assert count_class(n, PartitionClass.PED_GT1) == expected, n


def test_weight_bound():
    with pytest.raises(WeightBoundError):
        list(enumerate_all(-1))
    with pytest.raises(WeightBoundError):
        count_class(VerifyConfig.MAX_WEIGHT + 1, PartitionClass.PED)


@pytest.mark.parametrize("cls", list(PartitionClass))
def test_count_class_matches_enumeration(cls):
    for n in range(0, 26):
        assert count_class(n, cls) == sum(1 for _ in enumerate_class(n, cls)), (cls, n)


def test_count_four_regular_gt1_matches_filtered_enumeration():
    assert count_four_regular_gt1(0) == 1
    for n in range(1, 21):
        expected = sum(
            1 for partition in enumerate_class(n, PartitionClass.FOUR_REGULAR)
            if not partition.parts or partition.parts[-1] >= 2
        )
        assert count_four_regular_gt1(n) == expected, n


@pytest.mark.slow
def test_ped_equals_four_regular_up_to_60():
    for n in range(51, 61):
        assert count_class(n, PartitionClass.PED) == count_class(n, PartitionClass.FOUR_REGULAR), n
