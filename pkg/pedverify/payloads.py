"""
출력 페이로드
CLI와 에이전트 서버가 같은 JSON 구조를 쓰도록 결과를 사전으로 변환합니다.
"""

from typing import Any, Dict, List, Optional

from .bijections import MAPS, MappedPartition
from .config import VerifyConfig
from .errors import MapPreconditionError, WeightBoundError
from .partitions import Partition, PartitionClass, count_table, enumerate_class, make_partition
from .qseries import build_expression

INVERSE_MAPS = ("psi1", "psi3")


def parse_parts(text: str) -> Partition:
    """
    "4,3,1" 형식의 문자열을 정규형 Partition으로 변환합니다.
    빈 문자열은 빈 파티션입니다.

    Raises:
        ValueError: 정수가 아닌 항목이 있을 때
        InvalidPartitionError: 0 이하의 파트가 있을 때
    """
    items = [item.strip() for item in text.split(",")] if text.strip() else []
    return make_partition([int(item) for item in items])


def _check_enumeration_limit(n: int) -> None:
    if n > VerifyConfig.MAX_ENUM_BOUND:
        raise WeightBoundError(f"n={n}은 열거 범위 상한 {VerifyConfig.MAX_ENUM_BOUND}을 넘습니다")


def count_rows(cls: PartitionClass, n_max: int) -> List[Dict[str, int]]:
    _check_enumeration_limit(n_max)
    return [{"n": n, "count": count} for n, count in enumerate(count_table(n_max, cls))]


def list_rows(cls: PartitionClass, n: int) -> List[List[int]]:
    _check_enumeration_limit(n)
    return [list(partition.parts) for partition in enumerate_class(n, cls)]


def series_rows(expression: str, order: int) -> List[Dict[str, int]]:
    series = build_expression(expression, order)
    return [{"k": k, "coeff": coeff} for k, coeff in enumerate(series.coeffs)]


def apply_map(name: str, partition: Partition, target: Optional[int] = None) -> MappedPartition:
    """
    이름으로 사상을 적용합니다. psi 사상은 목표 n이 필요합니다.

    Raises:
        MapPreconditionError: 정의역 밖 입력이거나 psi에 target이 없을 때
    """
    function = MAPS[name]
    if name in INVERSE_MAPS:
        if target is None:
            raise MapPreconditionError(f"{name}에는 목표 n(--target)이 필요합니다")
        return function(partition, target)
    return function(partition)


def map_payload(name: str, preimage: Partition, mapped: MappedPartition) -> Dict[str, Any]:
    return {
        "map": name,
        "preimage": list(preimage.parts),
        "image": list(mapped.image.parts),
        "case": mapped.case_tag.value,
        "target_weight": mapped.target_weight,
    }
