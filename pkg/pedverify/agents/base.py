"""
추상 베이스 에이전트 클래스
모든 에이전트가 상속받는 기본 클래스
"""

from abc import ABC, abstractmethod
from typing import Any, Callable, Dict, Mapping


class BaseAgent(ABC):
    """
    A2A 에이전트의 베이스 클래스
    skill 이름을 처리 함수에 연결하고, 입력 사전을 받아 JSON 가능한 사전을 돌려줍니다.
    """

    def __init__(self, name: str):
        """
        Args:
            name: 에이전트 이름
        """
        self.name = name

    @property
    @abstractmethod
    def skills(self) -> Mapping[str, Callable[[Dict[str, Any]], Dict[str, Any]]]:
        """skill ID -> 처리 함수"""

    def process(self, skill: str, task_input: Dict[str, Any]) -> Dict[str, Any]:
        """
        skill 하나를 실행합니다.

        Raises:
            KeyError: 알 수 없는 skill
            ValueError: 입력 검증 실패 (도메인 예외 포함)
        """
        try:
            handler = self.skills[skill]
        except KeyError:
            raise KeyError(f"{self.name}: 알 수 없는 skill '{skill}' (가능: {', '.join(self.skills)})") from None
        return handler(task_input)

    @staticmethod
    def _require(task_input: Dict[str, Any], key: str) -> Any:
        if key not in task_input or task_input[key] is None:
            raise ValueError(f"Task 입력에 '{key}' 필드가 필요합니다")
        return task_input[key]
