"""
A2A 프로토콜 클라이언트 유틸리티
PartitionAgent 서버와 통신하기 위한 클라이언트
"""

from typing import Any, Dict, Optional

import httpx

from .models import AgentCard, Task, TaskState, TaskStatus


class A2AClient:
    """
    A2A 프로토콜 클라이언트
    원격 검증 에이전트에 Task를 보내고 결과를 받습니다.
    """

    def __init__(
        self,
        agent_url: str,
        timeout: int = 300,
        transport: Optional[httpx.AsyncBaseTransport] = None,
    ):
        """
        Args:
            agent_url: 에이전트의 기본 URL (예: "http://localhost:8010")
            timeout: 요청 타임아웃 (초). verify all 은 수 초 이상 걸릴 수 있음
            transport: httpx transport (테스트에서는 ASGITransport)
        """
        self.agent_url = agent_url.rstrip('/')
        self.timeout = timeout
        self.client = httpx.AsyncClient(timeout=timeout, transport=transport)

    async def get_agent_card(self) -> AgentCard:
        """
        에이전트의 AgentCard를 조회합니다.

        Raises:
            ConnectionError: HTTP 요청 실패 시
        """
        try:
            response = await self.client.get(f"{self.agent_url}/a2a/agent_card")
            response.raise_for_status()
            return AgentCard(**response.json())
        except httpx.HTTPError as e:
            raise ConnectionError(f"AgentCard 조회 실패 ({self.agent_url}): {str(e)}") from e

    async def execute_task(self, task: Task) -> TaskStatus:
        """
        에이전트에 Task를 전송하고 결과를 받습니다.
        통신 오류는 예외 대신 FAILED 상태로 돌려줍니다.
        """
        try:
            response = await self.client.post(
                f"{self.agent_url}/a2a/tasks",
                json=task.model_dump(exclude_none=True)
            )
            response.raise_for_status()
            return TaskStatus(**response.json())
        except httpx.HTTPError as e:
            return TaskStatus(
                state=TaskState.FAILED,
                error=f"HTTP 요청 실패: {str(e)}",
                message=f"에이전트 통신 실패 ({self.agent_url})"
            )

    async def run_skill(self, skill: str, **task_input: Any) -> TaskStatus:
        """skill 이름과 입력으로 Task를 만들어 실행"""
        return await self.execute_task(Task(skill=skill, input=dict(task_input)))

    async def health_check(self) -> bool:
        """에이전트가 정상이면 True"""
        try:
            response = await self.client.get(f"{self.agent_url}/health", timeout=5)
            response.raise_for_status()
            return True
        except httpx.HTTPError:
            return False

    async def close(self):
        """클라이언트 연결 종료"""
        await self.client.aclose()

    async def __aenter__(self):
        return self

    async def __aexit__(self, exc_type, exc_val, exc_tb):
        await self.close()
