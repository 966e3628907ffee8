"""
PartitionAgent A2A 서버
기본 포트 8010에서 실행되는 독립적인 A2A 에이전트 서버
"""

from typing import Optional

import uvicorn

from ..a2a_server import A2AServerBase
from ..config import VerifyConfig
from ..models import AgentCapabilities, AgentCard, AgentSkill, Task, TaskState, TaskStatus, TransportProtocol
from .partition_agent import PartitionAgent


def make_task_handler(agent: PartitionAgent):
    """
    PartitionAgent를 감싸는 동기 task handler 생성

    도메인 오류(잘못된 입력, 정의역 위반)는 FAILED 상태로 변환합니다.
    """

    def handle_partition_task(task: Task) -> TaskStatus:
        try:
            output = agent.process(task.skill, task.input or {})
        except (KeyError, ValueError) as e:
            return TaskStatus(
                state=TaskState.FAILED,
                error=str(e),
                message=f"{task.skill} 처리 실패: {str(e)}"
            )
        # verify의 검증 실패는 정상 완료된 Task이며 output.passed로 구분
        return TaskStatus(
            state=TaskState.COMPLETED,
            output=output,
            message=f"{task.skill} 완료"
        )

    return handle_partition_task


def create_partition_agent_card(base_url: str = "http://localhost:8010") -> AgentCard:
    """PartitionAgent의 AgentCard 생성"""
    return AgentCard(
        name="PartitionAgent",
        description="distinct even parts 분할과 4-regular 분할 항등식을 열거, 전단사, q-급수로 검증하는 에이전트",
        url=base_url,
        version="1.0.0",
        protocol_version="0.3.0",
        skills=[
            AgentSkill(
                id="count",
                name="Partition Count",
                description="클래스별 분할 개수를 열거로 셉니다.",
                examples=['{"class": "de1", "max": 5}'],
                tags=["partition", "enumeration"]
            ),
            AgentSkill(
                id="list",
                name="Partition Listing",
                description="클래스에 속하는 weight n 분할을 열거 순서대로 돌려줍니다.",
                examples=['{"class": "de3", "n": 5}'],
                tags=["partition", "enumeration"]
            ),
            AgentSkill(
                id="map",
                name="Bijection Trace",
                description="phi1/psi1/phi3/psi3 사상을 한 번 적용하고 경우 태그를 돌려줍니다.",
                examples=['{"bijection": "phi3", "partition": "4,3,1"}'],
                tags=["bijection"]
            ),
            AgentSkill(
                id="series",
                name="q-Series Coefficients",
                description="생성함수 또는 정리의 한 변을 절단 차수까지 전개합니다.",
                examples=['{"expr": "ped", "order": 5}'],
                tags=["q-series"]
            ),
            AgentSkill(
                id="verify",
                name="Identity Verification",
                description="항등식을 유한 범위에서 검증하고 보고서를 돌려줍니다.",
                examples=['{"identity": "all", "enum_bound": 40, "series_bound": 200}'],
                tags=["verification"]
            ),
        ],
        preferred_transport=TransportProtocol.HTTP_JSON,
        default_input_modes=["text"],
        default_output_modes=["text"],
        capabilities=AgentCapabilities(streaming=False),
    )


def create_server(base_url: str = "http://localhost:8010", agent: Optional[PartitionAgent] = None) -> A2AServerBase:
    """PartitionAgent A2A 서버 생성"""
    agent_card = create_partition_agent_card(base_url)
    return A2AServerBase(agent_card, make_task_handler(agent or PartitionAgent()))


if __name__ == "__main__":
    """서버 실행"""
    port = VerifyConfig.get_agent_port()
    host = VerifyConfig.get_agent_host()
    base_url = VerifyConfig.get_agent_url()

    server = create_server(base_url)
    app = server.get_app()

    print(f"PartitionAgent A2A 서버 시작: {base_url}")
    print(f"AgentCard: http://{host}:{port}/a2a/agent_card")
    print(f"Tasks: http://{host}:{port}/a2a/tasks")

    uvicorn.run(app, host=host, port=port)
