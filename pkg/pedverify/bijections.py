"""
ped 분할의 전단사 사상
phi1/psi1: ped(n) <-> DE1(n) ∪ DE1(n-1)
phi3/psi3: ped(n) <-> DE3(n+2) ∪ DE3(n-1)

각 사상은 어떤 경우로 처리되었는지 case_tag를 함께 돌려주므로
테스트에서 경우 조건(첫 간격 >= 2, = 1 등)을 다시 확인할 수 있습니다.
"""

from enum import Enum
from typing import Callable, Dict, List, Optional, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import MapPreconditionError
from .models import IdentityId, IdentityReport, Method, Witness
from .partitions import Partition, PartitionClass, enumerate_class, is_member


class CaseTag(str, Enum):
    """사상이 적용한 경우"""
    P1_CASE1 = "P1_CASE1"
    P1_CASE2 = "P1_CASE2"
    P3_CASE1 = "P3_CASE1"
    P3_CASE2I = "P3_CASE2I"
    P3_CASE2II = "P3_CASE2II"
    PSI1_CASE1 = "PSI1_CASE1"
    PSI1_CASE2 = "PSI1_CASE2"
    PSI3_CASE1 = "PSI3_CASE1"
    PSI3_CASE2 = "PSI3_CASE2"
    PSI3_CASE3 = "PSI3_CASE3"


CASE_LABELS: Dict[CaseTag, str] = {
    CaseTag.P1_CASE1: "case 1",
    CaseTag.P1_CASE2: "case 2",
    CaseTag.P3_CASE1: "case 1",
    CaseTag.P3_CASE2I: "case 2(i)",
    CaseTag.P3_CASE2II: "case 2(ii)",
    CaseTag.PSI1_CASE1: "case 1",
    CaseTag.PSI1_CASE2: "case 2",
    CaseTag.PSI3_CASE1: "case 1",
    CaseTag.PSI3_CASE2: "case 2",
    CaseTag.PSI3_CASE3: "case 3",
}


class Bijection(str, Enum):
    """검증 대상 정방향 사상"""
    PHI1 = "PHI1"
    PHI3 = "PHI3"


class MappedPartition(BaseModel):
    """
    사상의 상과 적용된 경우
    image의 weight는 항상 target_weight와 같습니다.
    """
    model_config = ConfigDict(frozen=True)

    image: Partition = Field(description="사상의 결과 파티션")
    case_tag: CaseTag = Field(description="적용된 경우")
    target_weight: int = Field(ge=0, description="상의 weight")

    @model_validator(mode="after")
    def _check_weight(self) -> "MappedPartition":
        if self.image.weight != self.target_weight:
            raise ValueError(
                f"상의 weight {self.image.weight}가 target_weight {self.target_weight}와 다릅니다"
            )
        return self


ForwardMap = Callable[[Partition], MappedPartition]
InverseMap = Callable[[Partition, int], MappedPartition]


def _with_head(partition: Partition, *head: int) -> Partition:
    """앞의 len(head)개 파트를 head로 바꾼 파티션. 정규형이 깨지면 ValidationError."""
    parts = tuple(head) + partition.parts[len(head):]
    return Partition(parts=parts, weight=sum(parts))


def _require_ped(partition: Partition, name: str) -> None:
    if not partition.parts:
        raise MapPreconditionError(f"{name}: 빈 파티션은 정의역에 없습니다")
    if not is_member(partition, PartitionClass.PED):
        raise MapPreconditionError(f"{name}: ped 파티션이 아닙니다 ({partition})")


def _require_target(n: int, name: str) -> None:
    if n < 1:
        raise MapPreconditionError(f"{name}: 목표 n은 1 이상이어야 합니다 (n={n})")


def phi1(partition: Partition) -> MappedPartition:
    """
    ped(n) -> DE1(n) ∪ DE1(n-1)

    Case 1 (가장 큰 파트가 홀수): 그대로 DE1(n)
    Case 2 (가장 큰 파트가 짝수): 가장 큰 파트를 1 줄여 DE1(n-1)

    Raises:
        MapPreconditionError: 빈 파티션이거나 ped가 아닐 때
    """
    _require_ped(partition, "phi1")
    n = partition.weight
    head = partition.largest
    if head % 2 == 1:
        return MappedPartition(image=partition, case_tag=CaseTag.P1_CASE1, target_weight=n)
    return MappedPartition(
        image=_with_head(partition, head - 1),
        case_tag=CaseTag.P1_CASE2,
        target_weight=n - 1,
    )


def psi1(image: Partition, n: int) -> MappedPartition:
    """
    phi1의 역사상. DE1(n) ∪ DE1(n-1) -> ped(n)

    Case 1 (weight n): 그대로
    Case 2 (weight n-1): 가장 큰 파트를 1 늘림

    Raises:
        MapPreconditionError: DE1이 아니거나 weight가 {n, n-1} 밖일 때
    """
    _require_target(n, "psi1")
    if not is_member(image, PartitionClass.DE1):
        raise MapPreconditionError(f"psi1: DE1 파티션이 아닙니다 ({image})")
    if image.weight == n:
        return MappedPartition(image=image, case_tag=CaseTag.PSI1_CASE1, target_weight=n)
    if image.weight == n - 1:
        return MappedPartition(
            image=_with_head(image, image.largest + 1),
            case_tag=CaseTag.PSI1_CASE2,
            target_weight=n,
        )
    raise MapPreconditionError(f"psi1: weight {image.weight}는 {{{n}, {n - 1}}}에 속하지 않습니다")


def phi3(partition: Partition) -> MappedPartition:
    """
    ped(n) -> DE3(n+2) ∪ DE3(n-1)

    Case 1     (가장 큰 파트 홀수): (λ1+2, λ2, ...), 첫 간격 >= 2
    Case 2(i)  (λ1 짝수, λ2 = λ1-1): (λ2+2, λ1, λ3, ...), 첫 간격 = 1
    Case 2(ii) (λ1 짝수, λ2 < λ1-1): (λ1-1, λ2, ...), weight n-1
    파트가 하나뿐이면 λ2 = 0으로 봅니다.

    Raises:
        MapPreconditionError: 빈 파티션이거나 ped가 아닐 때
    """
    _require_ped(partition, "phi3")
    n = partition.weight
    head, second = partition.largest, partition.second
    if head % 2 == 1:
        return MappedPartition(
            image=_with_head(partition, head + 2),
            case_tag=CaseTag.P3_CASE1,
            target_weight=n + 2,
        )
    if second == head - 1:
        return MappedPartition(
            image=_with_head(partition, second + 2, head),
            case_tag=CaseTag.P3_CASE2I,
            target_weight=n + 2,
        )
    return MappedPartition(
        image=_with_head(partition, head - 1),
        case_tag=CaseTag.P3_CASE2II,
        target_weight=n - 1,
    )


def psi3(image: Partition, n: int) -> MappedPartition:
    """
    phi3의 역사상. DE3(n+2) ∪ DE3(n-1) -> ped(n)

    Case 1 (weight n+2, μ1-μ2 >= 2): (μ1-2, μ2, ...)
    Case 2 (weight n+2, μ1-μ2 = 1):  (μ2, μ1-2, μ3, ...)
    Case 3 (weight n-1):             (μ1+1, μ2, ...)
    파트가 하나뿐이면 μ2 = 0으로 봅니다.

    Raises:
        MapPreconditionError: DE3가 아니거나 weight가 {n+2, n-1} 밖일 때
    """
    _require_target(n, "psi3")
    if not is_member(image, PartitionClass.DE3):
        raise MapPreconditionError(f"psi3: DE3 파티션이 아닙니다 ({image})")
    head, second = image.largest, image.second
    if image.weight == n + 2:
        if image.head_gap >= 2:
            if head - 2 < 1:
                raise MapPreconditionError(f"psi3: {image}의 가장 큰 파트를 2 줄이면 0 이하가 됩니다")
            return MappedPartition(
                image=_with_head(image, head - 2),
                case_tag=CaseTag.PSI3_CASE1,
                target_weight=n,
            )
        return MappedPartition(
            image=_with_head(image, second, head - 2),
            case_tag=CaseTag.PSI3_CASE2,
            target_weight=n,
        )
    if image.weight == n - 1:
        return MappedPartition(
            image=_with_head(image, head + 1),
            case_tag=CaseTag.PSI3_CASE3,
            target_weight=n,
        )
    raise MapPreconditionError(f"psi3: weight {image.weight}는 {{{n + 2}, {n - 1}}}에 속하지 않습니다")


MAPS: Dict[str, Callable] = {
    "phi1": phi1,
    "psi1": psi1,
    "phi3": phi3,
    "psi3": psi3,
}


def forward_case(which: Bijection, partition: Partition) -> CaseTag:
    """정의역 파티션에서 정방향 사상의 경우를 다시 유도"""
    head, second = partition.largest, partition.second
    if Bijection(which) == Bijection.PHI1:
        return CaseTag.P1_CASE1 if head % 2 == 1 else CaseTag.P1_CASE2
    if head % 2 == 1:
        return CaseTag.P3_CASE1
    return CaseTag.P3_CASE2I if second == head - 1 else CaseTag.P3_CASE2II


def inverse_case(which: Bijection, image: Partition, n: int) -> CaseTag:
    """목표 파티션에서 역사상의 경우를 다시 유도"""
    if Bijection(which) == Bijection.PHI1:
        return CaseTag.PSI1_CASE1 if image.weight == n else CaseTag.PSI1_CASE2
    if image.weight == n - 1:
        return CaseTag.PSI3_CASE3
    return CaseTag.PSI3_CASE1 if image.head_gap >= 2 else CaseTag.PSI3_CASE2


# 정방향 사상별 (목표 클래스, weight 오프셋, 항등식 ID)
_LAYERS: Dict[Bijection, Tuple[PartitionClass, Tuple[int, ...], IdentityId]] = {
    Bijection.PHI1: (PartitionClass.DE1, (0, -1), IdentityId.LEMMA_2_1),
    Bijection.PHI3: (PartitionClass.DE3, (2, -1), IdentityId.LEMMA_2_2),
}

_DEFAULT_PAIRS: Dict[Bijection, Tuple[ForwardMap, InverseMap]] = {
    Bijection.PHI1: (phi1, psi1),
    Bijection.PHI3: (phi3, psi3),
}


def _image_condition(tag: CaseTag, image: Partition) -> Optional[str]:
    """경우별로 상이 만족해야 하는 간격 조건. 위반 시 설명 문자열."""
    if tag == CaseTag.P3_CASE1 and image.head_gap < 2:
        return f"case 1 상의 첫 간격 {image.head_gap} < 2"
    if tag == CaseTag.P3_CASE2I and image.head_gap != 1:
        return f"case 2(i) 상의 첫 간격 {image.head_gap} != 1"
    # phi1 case 2는 (4,3) -> (3,3)처럼 가장 큰 파트가 반복될 수 있음
    if tag == CaseTag.P3_CASE2II and image.multiplicity(image.largest) != 1:
        return "case 2(ii) 상의 가장 큰 파트가 유일하지 않습니다"
    return None


def verify_bijection_layer(
    n: int,
    which: Bijection,
    forward: Optional[ForwardMap] = None,
    inverse: Optional[InverseMap] = None,
) -> IdentityReport:
    """
    weight n 한 층에서 정방향 사상이 전단사인지 원소 단위로 확인합니다.

    (a) 모든 상이 목표 클래스/weight에 속함 (b) 상이 서로 다름
    (c) ψ∘φ = id (d) 상 집합 = 목표 합집합 (e) φ∘ψ = id
    를 차례로 검사하고, 처음 깨진 지점을 witness로 보고합니다.

    Args:
        n: weight (1 이상)
        which: PHI1 또는 PHI3
        forward, inverse: 대체 사상 (결함 주입 테스트용)

    Returns:
        range_checked = (n, n)인 IdentityReport
    """
    which = Bijection(which)
    if n < 1:
        raise MapPreconditionError(f"전단사 층은 n >= 1에서만 정의됩니다 (n={n})")
    default_forward, default_inverse = _DEFAULT_PAIRS[which]
    forward = forward or default_forward
    inverse = inverse or default_inverse
    target_class, offsets, identity = _LAYERS[which]

    def fail(partition: Partition, detail: str) -> IdentityReport:
        witness = Witness(n=n, partition=list(partition.parts), detail=detail)
        return IdentityReport.failed(identity, Method.BIJECTION, n, n, witness)

    targets: List[Partition] = [
        mu
        for offset in offsets
        if n + offset >= 0
        for mu in enumerate_class(n + offset, target_class)
    ]
    target_set: Set[Partition] = set(targets)
    images: Dict[Partition, Partition] = {}

    for lam in enumerate_class(n, PartitionClass.PED):
        try:
            mapped = forward(lam)
        except Exception as exc:
            return fail(lam, f"정방향 사상 실패: {type(exc).__name__}: {exc}")
        if mapped.case_tag != forward_case(which, lam):
            return fail(lam, f"case_tag {mapped.case_tag.value}가 조건과 맞지 않습니다")
        if mapped.image not in target_set:
            return fail(lam, f"상 {mapped.image}가 목표 집합 밖입니다")
        violation = _image_condition(mapped.case_tag, mapped.image)
        if violation:
            return fail(lam, violation)
        if mapped.image in images:
            return fail(lam, f"상 {mapped.image}가 {images[mapped.image]}의 상과 겹칩니다")
        images[mapped.image] = lam
        try:
            back = inverse(mapped.image, n)
        except Exception as exc:
            return fail(lam, f"역사상 실패: {type(exc).__name__}: {exc}")
        if back.image != lam:
            return fail(lam, f"ψ∘φ가 항등이 아닙니다: {back.image}")

    for mu in targets:
        if mu not in images:
            return fail(mu, "목표 집합의 원소가 상에 없습니다 (전사 아님)")

    for mu in targets:
        try:
            back = inverse(mu, n)
        except Exception as exc:
            return fail(mu, f"역사상 실패: {type(exc).__name__}: {exc}")
        if back.case_tag != inverse_case(which, mu, n):
            return fail(mu, f"case_tag {back.case_tag.value}가 조건과 맞지 않습니다")
        try:
            again = forward(back.image)
        except Exception as exc:
            return fail(mu, f"정방향 사상 실패: {type(exc).__name__}: {exc}")
        if again.image != mu:
            return fail(mu, f"φ∘ψ가 항등이 아닙니다: {again.image}")

    return IdentityReport.passed(identity, Method.BIJECTION, n, n)
