"""
PartitionAgent: 분할 항등식 검증 에이전트
count / list / map / series / verify skill을 라이브러리 호출로 처리합니다.
"""

from typing import Any, Callable, Dict, List, Mapping, Optional, Union

from ..config import VerifyConfig
from ..console import log
from ..models import IdentityId, Method
from ..partitions import PartitionClass, make_partition
from ..payloads import apply_map, count_rows, list_rows, map_payload, parse_parts, series_rows
from ..verifier import COMPATIBLE_METHODS, Verifier, all_passed, bound_for
from .base import BaseAgent


class PartitionAgent(BaseAgent):
    """
    분할 항등식 검증 에이전트
    입력은 CLI 인자와 같은 이름의 필드를 쓰고, 출력은 CLI JSON과 같은 구조입니다.
    """

    def __init__(self, verifier: Optional[Verifier] = None):
        super().__init__(name="PartitionAgent")
        self.verifier = verifier or Verifier(verbose=VerifyConfig.is_verbose())

    @property
    def skills(self) -> Mapping[str, Callable[[Dict[str, Any]], Dict[str, Any]]]:
        return {
            "count": self.count,
            "list": self.enumerate,
            "map": self.map,
            "series": self.series,
            "verify": self.verify,
        }

    @staticmethod
    def _partition(value: Union[str, List[int]]):
        if isinstance(value, str):
            return parse_parts(value)
        return make_partition(list(value))

    @staticmethod
    def _bound(task_input: Dict[str, Any], key: str, default: Callable[[], int]) -> int:
        # 0도 명시적인 값이므로 Verifier가 거부하도록 그대로 넘김
        value = task_input.get(key)
        return default() if value is None else int(value)

    def count(self, task_input: Dict[str, Any]) -> Dict[str, Any]:
        cls = PartitionClass(self._require(task_input, "class"))
        n_max = int(self._require(task_input, "max"))
        return {"class": cls.value, "rows": count_rows(cls, n_max)}

    def enumerate(self, task_input: Dict[str, Any]) -> Dict[str, Any]:
        cls = PartitionClass(self._require(task_input, "class"))
        n = int(self._require(task_input, "n"))
        return {"class": cls.value, "n": n, "partitions": list_rows(cls, n)}

    def map(self, task_input: Dict[str, Any]) -> Dict[str, Any]:
        name = self._require(task_input, "bijection")
        preimage = self._partition(self._require(task_input, "partition"))
        target = task_input.get("target")
        mapped = apply_map(name, preimage, None if target is None else int(target))
        return map_payload(name, preimage, mapped)

    def series(self, task_input: Dict[str, Any]) -> Dict[str, Any]:
        expression = self._require(task_input, "expr")
        order = int(self._require(task_input, "order"))
        return {"expr": expression, "rows": series_rows(expression, order)}

    def verify(self, task_input: Dict[str, Any]) -> Dict[str, Any]:
        label = str(task_input.get("identity", "all"))
        enum_bound = self._bound(task_input, "enum_bound", VerifyConfig.get_enum_bound)
        series_bound = self._bound(task_input, "series_bound", VerifyConfig.get_series_bound)
        if label == "all":
            reports = self.verifier.verify_all(enum_bound, series_bound)
        else:
            identity = IdentityId(label)
            method = task_input.get("method")
            methods = [Method(method)] if method else list(COMPATIBLE_METHODS[identity])
            reports = [
                self.verifier.verify_identity(identity, bound_for(m, enum_bound, series_bound), m)
                for m in methods
            ]
        passed = all_passed(reports)
        log("Agent", f"verify {label}: {'PASS' if passed else 'FAIL'} ({len(reports)} reports)")
        return {"passed": passed, "reports": [report.to_json_dict() for report in reports]}
