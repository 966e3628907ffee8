"""
전단사 사상 테스트
phi1/psi1, phi3/psi3의 경우별 동작과 층 단위 전단사 검사를 확인합니다.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pedverify.bijections import (
    Bijection,
    CaseTag,
    MappedPartition,
    forward_case,
    phi1,
    phi3,
    psi1,
    psi3,
    verify_bijection_layer,
)
from pedverify.errors import MapPreconditionError
from pedverify.models import IdentityId, Method, Verdict
from pedverify.partitions import PartitionClass, count_class, enumerate_class, is_member, make_partition

P = make_partition


def test_phi1_examples():
    assert phi1(P([3, 2, 1])) == MappedPartition(image=P([3, 2, 1]), case_tag=CaseTag.P1_CASE1, target_weight=6)
    assert phi1(P([4, 3])) == MappedPartition(image=P([3, 3]), case_tag=CaseTag.P1_CASE2, target_weight=6)
    assert phi1(P([2])) == MappedPartition(image=P([1]), case_tag=CaseTag.P1_CASE2, target_weight=1)


def test_psi1_examples():
    assert psi1(P([3, 3]), 7) == MappedPartition(image=P([4, 3]), case_tag=CaseTag.PSI1_CASE2, target_weight=7)
    assert psi1(P([3, 2, 1]), 6).case_tag == CaseTag.PSI1_CASE1
    assert psi1(P([1]), 2).image == P([2])


def test_phi3_examples():
    assert phi3(P([3, 2])) == MappedPartition(image=P([5, 2]), case_tag=CaseTag.P3_CASE1, target_weight=7)
    assert phi3(P([4, 3, 1])) == MappedPartition(image=P([5, 4, 1]), case_tag=CaseTag.P3_CASE2I, target_weight=10)
    assert phi3(P([4, 1])) == MappedPartition(image=P([3, 1]), case_tag=CaseTag.P3_CASE2II, target_weight=4)
    # 짝수 파트 하나는 λ2 = 0 이므로 case 2(ii)
    assert phi3(P([2])).case_tag == CaseTag.P3_CASE2II
    assert phi3(P([2])).image == P([1])


def test_psi3_examples():
    assert psi3(P([5, 2]), 5) == MappedPartition(image=P([3, 2]), case_tag=CaseTag.PSI3_CASE1, target_weight=5)
    assert psi3(P([5, 4, 1]), 8) == MappedPartition(image=P([4, 3, 1]), case_tag=CaseTag.PSI3_CASE2, target_weight=8)
    assert psi3(P([3, 1]), 5) == MappedPartition(image=P([4, 1]), case_tag=CaseTag.PSI3_CASE3, target_weight=5)
    # 단일 홀수 파트는 μ2 = 0 으로 case 1
    assert psi3(P([3]), 1).image == P([1])


def test_forward_maps_reject_bad_input():
    for forward in (phi1, phi3):
        with pytest.raises(MapPreconditionError):
            forward(P([]))
        with pytest.raises(MapPreconditionError):
            forward(P([2, 2, 1]))


def test_inverse_maps_reject_bad_input():
    with pytest.raises(MapPreconditionError):
        psi1(P([3, 3]), 9)
    with pytest.raises(MapPreconditionError):
        psi1(P([4, 3]), 7)
    with pytest.raises(MapPreconditionError):
        psi3(P([5, 2]), 6)
    with pytest.raises(MapPreconditionError):
        psi3(P([3, 3]), 4)
    with pytest.raises(MapPreconditionError):
        psi3(P([3]), 0)


def test_weight_conservation_and_case_disjointness():
    offsets = {
        CaseTag.P1_CASE1: 0,
        CaseTag.P1_CASE2: -1,
        CaseTag.P3_CASE1: 2,
        CaseTag.P3_CASE2I: 2,
        CaseTag.P3_CASE2II: -1,
    }
    for n in range(1, 21):
        for lam in enumerate_class(n, PartitionClass.PED):
            for forward, which, target in ((phi1, Bijection.PHI1, PartitionClass.DE1),
                                           (phi3, Bijection.PHI3, PartitionClass.DE3)):
                mapped = forward(lam)
                assert mapped.case_tag == forward_case(which, lam)
                assert mapped.target_weight == n + offsets[mapped.case_tag]
                assert is_member(mapped.image, target)


def test_phi3_gap_conditions_match_provenance():
    for n in range(1, 25):
        for lam in enumerate_class(n, PartitionClass.PED):
            mapped = phi3(lam)
            if mapped.case_tag == CaseTag.P3_CASE1:
                assert mapped.image.head_gap >= 2
                assert psi3(mapped.image, n).case_tag == CaseTag.PSI3_CASE1
            elif mapped.case_tag == CaseTag.P3_CASE2I:
                assert mapped.image.head_gap == 1
                assert psi3(mapped.image, n).case_tag == CaseTag.PSI3_CASE2
            else:
                assert psi3(mapped.image, n).case_tag == CaseTag.PSI3_CASE3


@st.composite
def ped_partitions(draw):
    """짝수 파트가 반복되지 않는 비어 있지 않은 파티션"""
    odd = draw(st.lists(st.sampled_from([1, 3, 5, 7, 9, 11]), max_size=8))
    even = draw(st.sets(st.sampled_from([2, 4, 6, 8, 10, 12]), max_size=4))
    parts = odd + sorted(even)
    if not parts:
        parts = [draw(st.integers(min_value=1, max_value=12))]
    return P(parts)


@settings(max_examples=200)
@given(ped_partitions())
def test_round_trips_on_random_ped_partitions(lam):
    n = lam.weight
    assert psi1(phi1(lam).image, n).image == lam
    assert psi3(phi3(lam).image, n).image == lam


@pytest.mark.parametrize("n", range(1, 21))
@pytest.mark.parametrize("which", list(Bijection))
def test_verify_bijection_layer_passes(n, which):
    report = verify_bijection_layer(n, which)
    assert report.verdict == Verdict.PASS
    assert report.range_checked == (n, n)
    assert report.method == Method.BIJECTION


def test_layer_sizes_and_identity_ids():
    assert count_class(3, PartitionClass.PED) == 3
    assert (count_class(3, PartitionClass.DE1), count_class(2, PartitionClass.DE1)) == (2, 1)
    assert (count_class(7, PartitionClass.DE3), count_class(4, PartitionClass.DE3)) == (5, 1)
    assert verify_bijection_layer(1, Bijection.PHI1).identity_id == IdentityId.LEMMA_2_1
    assert verify_bijection_layer(5, Bijection.PHI3).identity_id == IdentityId.LEMMA_2_2


def test_verify_bijection_layer_reports_broken_case():
    def broken_phi3(lam):
        mapped = phi3(lam)
        if mapped.case_tag == CaseTag.P3_CASE2I:
            # 두 파트를 바꾸지 않고 가장 큰 파트만 늘림
            image = P([lam.largest + 2] + list(lam.parts[1:]))
            return MappedPartition(image=image, case_tag=mapped.case_tag, target_weight=image.weight)
        return mapped

    report = verify_bijection_layer(7, Bijection.PHI3, forward=broken_phi3)
    assert report.verdict == Verdict.FAIL
    assert report.witness.n == 7
    assert report.witness.partition == [4, 3]


def test_verify_bijection_layer_rejects_zero():
    with pytest.raises(MapPreconditionError):
        verify_bijection_layer(0, Bijection.PHI1)


def test_verify_bijection_layer_reports_crashing_forward_map():
    def crashing_phi1(lam):
        if lam.parts == (2, 1):
            return lam.parts[5]
        return phi1(lam)

    report = verify_bijection_layer(3, Bijection.PHI1, forward=crashing_phi1)
    assert report.verdict == Verdict.FAIL
    assert report.witness.n == 3
    assert report.witness.partition == [2, 1]
    assert "IndexError" in report.witness.detail


def test_verify_bijection_layer_reports_crashing_inverse_map():
    def crashing_psi3(mu, n):
        if mu.parts == (5, 2):
            raise KeyError(mu.parts)
        return psi3(mu, n)

    report = verify_bijection_layer(5, Bijection.PHI3, inverse=crashing_psi3)
    assert report.verdict == Verdict.FAIL
    assert report.witness.n == 5
    assert report.witness.partition == [3, 2]
    assert "KeyError" in report.witness.detail
