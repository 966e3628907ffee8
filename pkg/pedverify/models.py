"""
검증 결과 및 A2A 프로토콜 데이터 모델
Pydantic을 사용하여 검증 보고서와 에이전트 간 통신 구조를 정의합니다.
"""

from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class IdentityId(str, Enum):
    """검증 대상 항등식"""
    EQ_1_1 = "EQ_1_1"
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    LEMMA_2_1 = "LEMMA_2_1"
    LEMMA_2_2 = "LEMMA_2_2"
    LEMMA_2_3 = "LEMMA_2_3"
    GF_DE1 = "GF_DE1"
    GF_DE2 = "GF_DE2"
    GF_DE3 = "GF_DE3"


class Method(str, Enum):
    """검증 경로"""
    ENUMERATION = "ENUMERATION"
    SERIES = "SERIES"
    BIJECTION = "BIJECTION"
    CROSS = "CROSS"


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class OutputFormat(str, Enum):
    """CLI 출력 형식"""
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class Witness(BaseModel):
    """
    실패한 검증의 첫 반례
    수치 비교 실패는 n/lhs/rhs, 전단사 실패는 partition/detail을 채웁니다.
    """
    model_config = ConfigDict(frozen=True)

    n: Optional[int] = Field(default=None, description="처음 어긋난 n (또는 계수 차수)")
    lhs: Optional[int] = Field(default=None, description="좌변 값")
    rhs: Optional[int] = Field(default=None, description="우변 값")
    partition: Optional[List[int]] = Field(default=None, description="반례 파티션의 파트")
    detail: Optional[str] = Field(default=None, description="어떤 조건이 깨졌는지")


class IdentityReport(BaseModel):
    """
    한 항등식 검증의 결과
    verdict가 pass이면 witness는 반드시 비어 있습니다.
    """
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    identity_id: IdentityId = Field(serialization_alias="identity", description="항등식 ID")
    method: Method = Field(description="검증 경로")
    range_checked: Tuple[int, int] = Field(
        serialization_alias="range",
        description="실제로 검사한 구간 [lo, hi]",
    )
    verdict: Verdict = Field(description="pass 또는 fail")
    witness: Optional[Witness] = Field(default=None, description="첫 반례")

    @model_validator(mode="after")
    def _check_verdict(self) -> "IdentityReport":
        lo, hi = self.range_checked
        if lo > hi:
            raise ValueError(f"잘못된 검사 구간: [{lo}, {hi}]")
        if (self.verdict == Verdict.PASS) != (self.witness is None):
            raise ValueError("verdict가 pass인 것과 witness가 없는 것은 동치여야 합니다")
        return self

    @classmethod
    def passed(cls, identity: IdentityId, method: Method, lo: int, hi: int) -> "IdentityReport":
        return cls(identity_id=identity, method=method, range_checked=(lo, hi), verdict=Verdict.PASS)

    @classmethod
    def failed(
        cls, identity: IdentityId, method: Method, lo: int, hi: int, witness: Witness
    ) -> "IdentityReport":
        return cls(
            identity_id=identity,
            method=method,
            range_checked=(lo, hi),
            verdict=Verdict.FAIL,
            witness=witness,
        )

    @property
    def ok(self) -> bool:
        return self.verdict == Verdict.PASS

    def to_json_dict(self) -> Dict[str, Any]:
        """키 {identity, method, range, verdict, witness}를 갖는 JSON 사전"""
        data = self.model_dump(mode="json", by_alias=True)
        data["range"] = list(self.range_checked)
        if self.witness is not None:
            data["witness"] = self.witness.model_dump(mode="json", exclude_none=True)
        return data


# A2A Protocol Models
class TransportProtocol(str, Enum):
    """A2A 전송 프로토콜"""
    HTTP_JSON = "HTTP+JSON"


class AgentSkill(BaseModel):
    """A2A Agent Skill 정의"""
    id: str = Field(description="Skill 고유 ID")
    name: str = Field(description="Skill 이름")
    description: str = Field(description="Skill 설명")
    examples: Optional[List[str]] = Field(default=None, description="사용 예제")
    tags: Optional[List[str]] = Field(default=None, description="태그")


class AgentCapabilities(BaseModel):
    """A2A Agent Capabilities"""
    streaming: bool = Field(default=False, description="스트리밍 지원 여부")


class AgentCard(BaseModel):
    """A2A AgentCard - 에이전트 메타데이터"""
    name: str = Field(description="에이전트 이름")
    description: str = Field(description="에이전트 설명")
    url: str = Field(description="에이전트 URL")
    version: str = Field(default="1.0.0", description="에이전트 버전")
    protocol_version: str = Field(default="0.3.0", description="A2A 프로토콜 버전")
    skills: List[AgentSkill] = Field(description="제공하는 Skill 목록")
    preferred_transport: Optional[TransportProtocol] = Field(
        default=TransportProtocol.HTTP_JSON,
        description="선호하는 전송 프로토콜"
    )
    default_input_modes: List[str] = Field(default=["text"], description="기본 입력 모드")
    default_output_modes: List[str] = Field(default=["text"], description="기본 출력 모드")
    capabilities: Optional[AgentCapabilities] = Field(default=None, description="에이전트 기능")


class TaskState(str, Enum):
    """A2A Task 상태"""
    COMPLETED = "completed"
    FAILED = "failed"


class Task(BaseModel):
    """A2A Task - 에이전트에 전달되는 작업"""
    skill: str = Field(description="실행할 Skill ID")
    input: Dict[str, Any] = Field(default_factory=dict, description="Task 입력 데이터")
    task_id: Optional[str] = Field(default=None, description="Task 고유 ID")


class TaskStatus(BaseModel):
    """A2A TaskStatus - Task 실행 결과"""
    state: TaskState = Field(description="Task 상태")
    output: Optional[Dict[str, Any]] = Field(default=None, description="Task 출력")
    message: Optional[str] = Field(default=None, description="상태 메시지")
    error: Optional[str] = Field(default=None, description="에러 메시지")
