"""
파티션 코어
정규형 파티션 표현, n의 모든 분할 열거, 제한된 분할 클래스의 판정과 열거를 담당합니다.

개수는 항상 실제 열거로 셉니다. 생성함수나 점화식으로 개수를 구하지 않습니다.
"""

from enum import Enum
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .config import VerifyConfig
from .errors import InvalidPartitionError, WeightBoundError

Parts = Tuple[int, ...]


class PartitionClass(str, Enum):
    """제한된 분할 클래스 (값은 CLI 이름)"""
    PED = "ped"
    FOUR_REGULAR = "4regular"
    DE1 = "de1"
    DE2 = "de2"
    DE3 = "de3"
    PED_GT1 = "ped-gt1"


class Partition(BaseModel):
    """
    정규형 파티션
    parts는 비증가 순서의 양의 정수, weight는 그 합입니다.
    """
    model_config = ConfigDict(frozen=True)

    parts: Parts = Field(default=(), description="비증가 순서의 파트")
    weight: int = Field(default=0, ge=0, description="파트의 합")

    @model_validator(mode="after")
    def _check_canonical(self) -> "Partition":
        if any(part < 1 for part in self.parts):
            raise ValueError(f"모든 파트는 1 이상이어야 합니다: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"파트가 비증가 순서가 아닙니다: {self.parts}")
        if sum(self.parts) != self.weight:
            raise ValueError(f"weight {self.weight}가 파트 합 {sum(self.parts)}과 다릅니다")
        return self

    @property
    def largest(self) -> int:
        """가장 큰 파트 (빈 파티션이면 0)"""
        return self.parts[0] if self.parts else 0

    @property
    def second(self) -> int:
        """두 번째 파트 (없으면 0)"""
        return self.parts[1] if len(self.parts) > 1 else 0

    @property
    def head_gap(self) -> int:
        """largest - second"""
        return self.largest - self.second

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "()"
        return ",".join(str(part) for part in self.parts)


def _trusted(parts: Parts) -> Partition:
    # 열거기가 만든 파트는 이미 정규형
    return Partition.model_construct(parts=parts, weight=sum(parts))


def make_partition(parts: Sequence[int]) -> Partition:
    """
    임의 순서의 파트로 정규형 Partition을 만듭니다.

    Args:
        parts: 양의 정수 시퀀스

    Returns:
        비증가 정렬된 Partition

    Raises:
        InvalidPartitionError: 0 이하이거나 정수가 아닌 파트가 있을 때
    """
    for part in parts:
        if isinstance(part, bool) or not isinstance(part, int):
            raise InvalidPartitionError(f"파트는 정수여야 합니다: {part!r}")
        if part < 1:
            raise InvalidPartitionError(f"파트는 1 이상이어야 합니다: {part}")
    return _trusted(tuple(sorted(parts, reverse=True)))


def _check_weight(n: int) -> None:
    if n < 0:
        raise WeightBoundError(f"n은 0 이상이어야 합니다: {n}")
    if n > VerifyConfig.MAX_WEIGHT:
        raise WeightBoundError(f"n={n}은 열거 상한 {VerifyConfig.MAX_WEIGHT}을 넘습니다")


# ---------------------------------------------------------------------------
# 판정
# ---------------------------------------------------------------------------

def _even_parts_distinct(parts: Parts) -> bool:
    # 정렬되어 있으므로 반복은 인접 원소에서만 나타남
    return all(not (a == b and a % 2 == 0) for a, b in zip(parts, parts[1:]))


def _is_de1(parts: Parts) -> bool:
    return bool(parts) and parts[0] % 2 == 1 and _even_parts_distinct(parts)


_PREDICATES: Dict[PartitionClass, Callable[[Parts], bool]] = {
    PartitionClass.PED: _even_parts_distinct,
    PartitionClass.FOUR_REGULAR: lambda parts: all(part % 4 for part in parts),
    PartitionClass.DE1: _is_de1,
    PartitionClass.DE2: lambda parts: _is_de1(parts) and len(parts) > 1 and parts[1] == parts[0],
    PartitionClass.DE3: lambda parts: _is_de1(parts) and (len(parts) == 1 or parts[1] < parts[0]),
    PartitionClass.PED_GT1: lambda parts: _even_parts_distinct(parts) and (not parts or parts[-1] >= 2),
}


def is_member(partition: Partition, cls: PartitionClass) -> bool:
    """
    파티션이 클래스 조건을 만족하는지 판정합니다.
    빈 파티션은 PED, FOUR_REGULAR, PED_GT1에 속하고 DE1/DE2/DE3에는 속하지 않습니다.
    """
    return _PREDICATES[PartitionClass(cls)](partition.parts)


# ---------------------------------------------------------------------------
# 열거
# ---------------------------------------------------------------------------

class _PartRule:
    """꼬리 파트 선택 규칙: 허용 파트, 최소 파트, 반복 허용 여부"""

    __slots__ = ("min_part", "allows", "repeatable")

    def __init__(
        self,
        min_part: int = 1,
        allows: Callable[[int], bool] = lambda part: True,
        repeatable: Callable[[int], bool] = lambda part: True,
    ) -> None:
        self.min_part = min_part
        self.allows = allows
        self.repeatable = repeatable


_ANY = _PartRule()
_PED = _PartRule(repeatable=lambda part: part % 2 == 1)
_FOUR_REGULAR = _PartRule(allows=lambda part: part % 4 != 0)
_PED_GT1 = _PartRule(min_part=2, repeatable=lambda part: part % 2 == 1)
_FOUR_REGULAR_GT1 = _PartRule(min_part=2, allows=lambda part: part % 4 != 0)


def _descend(remaining: int, cap: int, stack: List[int], rule: _PartRule) -> Iterator[Parts]:
    """stack 뒤에 붙일 파트를 사전식 내림차순으로 고릅니다."""
    if remaining == 0:
        yield tuple(stack)
        return
    previous = stack[-1] if stack else 0
    for part in range(min(remaining, cap), rule.min_part - 1, -1):
        if not rule.allows(part):
            continue
        if part == previous and not rule.repeatable(part):
            continue
        stack.append(part)
        yield from _descend(remaining - part, part, stack, rule)
        stack.pop()


def _tally(remaining: int, cap: int, previous: int, rule: _PartRule) -> int:
    """_descend와 같은 트리를 방문하되 튜플을 만들지 않고 잎만 셉니다."""
    if remaining == 0:
        return 1
    total = 0
    for part in range(min(remaining, cap), rule.min_part - 1, -1):
        if not rule.allows(part):
            continue
        if part == previous and not rule.repeatable(part):
            continue
        total += _tally(remaining - part, part, part, rule)
    return total


def _odd_heads(n: int) -> range:
    top = n if n % 2 == 1 else n - 1
    return range(top, 0, -2)


def _de1_parts(n: int) -> Iterator[Parts]:
    for head in _odd_heads(n):
        yield from _descend(n - head, head, [head], _PED)


def _de2_parts(n: int) -> Iterator[Parts]:
    for head in _odd_heads(n):
        if 2 * head > n:
            continue
        yield from _descend(n - 2 * head, head, [head, head], _PED)


def _de3_parts(n: int) -> Iterator[Parts]:
    for head in _odd_heads(n):
        yield from _descend(n - head, head - 1, [head], _PED)


_GENERATORS: Dict[PartitionClass, Callable[[int], Iterator[Parts]]] = {
    PartitionClass.PED: lambda n: _descend(n, n, [], _PED),
    PartitionClass.FOUR_REGULAR: lambda n: _descend(n, n, [], _FOUR_REGULAR),
    PartitionClass.DE1: _de1_parts,
    PartitionClass.DE2: _de2_parts,
    PartitionClass.DE3: _de3_parts,
    PartitionClass.PED_GT1: lambda n: _descend(n, n, [], _PED_GT1),
}


_TALLIES: Dict[PartitionClass, Callable[[int], int]] = {
    PartitionClass.PED: lambda n: _tally(n, n, 0, _PED),
    PartitionClass.FOUR_REGULAR: lambda n: _tally(n, n, 0, _FOUR_REGULAR),
    PartitionClass.DE1: lambda n: sum(_tally(n - h, h, h, _PED) for h in _odd_heads(n)),
    PartitionClass.DE2: lambda n: sum(_tally(n - 2 * h, h, h, _PED) for h in _odd_heads(n) if 2 * h <= n),
    PartitionClass.DE3: lambda n: sum(_tally(n - h, h - 1, h, _PED) for h in _odd_heads(n)),
    PartitionClass.PED_GT1: lambda n: _tally(n, n, 0, _PED_GT1),
}


def enumerate_all(n: int) -> Iterator[Partition]:
    """
    n의 모든 분할을 사전식 내림차순으로 한 번씩 생성합니다.
    n=0이면 빈 파티션 하나만 생성합니다.
    """
    _check_weight(n)
    for parts in _descend(n, n, [], _ANY):
        yield _trusted(parts)


def enumerate_class(n: int, cls: PartitionClass) -> Iterator[Partition]:
    """
    클래스 cls에 속하는 weight n의 파티션을 enumerate_all과 같은 순서로 생성합니다.
    결과는 enumerate_all(n)을 is_member로 거른 것과 같습니다.
    """
    _check_weight(n)
    for parts in _GENERATORS[PartitionClass(cls)](n):
        yield _trusted(parts)


def count_class(n: int, cls: PartitionClass) -> int:
    """
    열거로 센 클래스 cls의 weight n 파티션 개수
    enumerate_class와 같은 탐색 트리의 잎을 하나씩 셉니다 (메모이제이션 없음).
    """
    _check_weight(n)
    return _TALLIES[PartitionClass(cls)](n)


def count_four_regular_gt1(n: int) -> int:
    """모든 파트가 2 이상인 4-regular 분할 개수 (열거). n=0이면 빈 파티션 하나."""
    _check_weight(n)
    return _tally(n, n, 0, _FOUR_REGULAR_GT1)


def count_table(n_max: int, cls: PartitionClass) -> List[int]:
    """0..n_max 각각에 대한 count_class 값"""
    return [count_class(n, cls) for n in range(n_max + 1)]
