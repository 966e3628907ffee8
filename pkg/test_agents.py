"""
에이전트 테스트
PartitionAgent skill과 A2A 서버/클라이언트 왕복을 확인합니다.
"""

import asyncio

import httpx
import pytest
from fastapi.testclient import TestClient

from pedverify.a2a_client import A2AClient
from pedverify.agents import PartitionAgent
from pedverify.agents.verifier_server import create_server, make_task_handler
from pedverify.models import Task, TaskState

BASE_URL = "http://testserver"


@pytest.fixture(scope="module")
def agent():
    return PartitionAgent()


@pytest.fixture(scope="module")
def server():
    return create_server(BASE_URL)


def test_partition_agent_skills(agent):
    assert set(agent.skills) == {"count", "list", "map", "series", "verify"}

    counted = agent.process("count", {"class": "ped", "max": 5})
    assert [row["count"] for row in counted["rows"]] == [1, 1, 2, 3, 4, 6]

    listed = agent.process("list", {"class": "de3", "n": 5})
    assert listed["partitions"] == [[5], [3, 2], [3, 1, 1]]

    mapped = agent.process("map", {"bijection": "phi1", "partition": [4, 3]})
    assert mapped["image"] == [3, 3]
    assert mapped["case"] == "P1_CASE2"

    series = agent.process("series", {"expr": "t3-lhs", "order": 5})
    assert [row["coeff"] for row in series["rows"]] == [0, 1, 0, 1, 2, 3]


def test_partition_agent_verify(agent):
    result = agent.process("verify", {"identity": "LEMMA_2_2", "enum_bound": 10})
    assert result["passed"] is True
    assert [report["method"] for report in result["reports"]] == ["ENUMERATION", "BIJECTION"]

    result = agent.process("verify", {"identity": "all", "enum_bound": 6, "series_bound": 15})
    assert result["passed"] is True
    assert len(result["reports"]) == 14


def test_partition_agent_errors(agent):
    with pytest.raises(KeyError):
        agent.process("plan", {})
    with pytest.raises(ValueError):
        agent.process("count", {"class": "ped"})
    with pytest.raises(ValueError):
        agent.process("map", {"bijection": "psi3", "partition": "5,2"})


def test_task_handler_status(agent):
    handler = make_task_handler(agent)
    done = handler(Task(skill="count", input={"class": "de1", "max": 3}))
    assert done.state == TaskState.COMPLETED
    failed = handler(Task(skill="map", input={"bijection": "phi3", "partition": "2,2"}))
    assert failed.state == TaskState.FAILED
    assert "ped" in failed.error


def test_partition_agent_passes_explicit_zero_bounds(agent):
    with pytest.raises(ValueError):
        agent.process("verify", {"identity": "T1", "series_bound": 0})
    with pytest.raises(ValueError):
        agent.process("verify", {"identity": "all", "enum_bound": 0})
    with pytest.raises(ValueError):
        agent.process("count", {"class": "ped", "max": 81})
    failed = make_task_handler(agent)(Task(skill="verify", input={"identity": "T1", "series_bound": 0}))
    assert failed.state == TaskState.FAILED


def test_server_routes(server):
    client = TestClient(server.get_app())

    card = client.get("/a2a/agent_card").json()
    assert card["name"] == "PartitionAgent"
    assert {skill["id"] for skill in card["skills"]} == {"count", "list", "map", "series", "verify"}

    assert client.get("/health").json() == {"status": "healthy", "agent": "PartitionAgent"}

    response = client.post("/a2a/tasks", json={"skill": "map", "input": {"bijection": "phi3", "partition": "4,3,1"}})
    status = response.json()
    assert status["state"] == "completed"
    assert status["output"]["image"] == [5, 4, 1]

    response = client.post("/a2a/tasks", json={"skill": "unknown"})
    assert response.json()["state"] == "failed"


def test_client_round_trip(server):
    async def scenario():
        transport = httpx.ASGITransport(app=server.get_app())
        async with A2AClient(BASE_URL, transport=transport) as client:
            card = await client.get_agent_card()
            healthy = await client.health_check()
            counted = await client.run_skill("count", **{"class": "de3", "max": 5})
            verified = await client.run_skill("verify", identity="T2", series_bound=30)
            return card, healthy, counted, verified

    card, healthy, counted, verified = asyncio.run(scenario())
    assert card.name == "PartitionAgent"
    assert healthy
    assert counted.state == TaskState.COMPLETED
    assert [row["count"] for row in counted.output["rows"]] == [0, 1, 0, 1, 1, 3]
    assert verified.output["passed"] is True
    assert verified.output["reports"][0]["range"] == [0, 30]


def test_client_reports_unreachable_agent():
    def refuse(request):
        raise httpx.ConnectError("connection refused", request=request)

    async def scenario():
        async with A2AClient(BASE_URL, transport=httpx.MockTransport(refuse)) as client:
            status = await client.run_skill("count", max=3)
            healthy = await client.health_check()
            with pytest.raises(ConnectionError):
                await client.get_agent_card()
            return status, healthy

    status, healthy = asyncio.run(scenario())
    assert status.state == TaskState.FAILED
    assert not healthy
